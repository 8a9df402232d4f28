// Gapless playback of hop-sized float32 chunks via the Web Audio API.
// Chunks are scheduled back to back on an absolute timeline so weight
// changes and A/B switches never interrupt the stream.

export class ChunkPlayer {
  private ctx: AudioContext;
  private nextTime = 0;

  constructor(private sampleRate: number) {
    this.ctx = new AudioContext({ sampleRate });
  }

  play(samples: Float32Array): void {
    const buffer = this.ctx.createBuffer(1, samples.length, this.sampleRate);
    buffer.copyToChannel(new Float32Array(samples), 0);
    const src = this.ctx.createBufferSource();
    src.buffer = buffer;
    src.connect(this.ctx.destination);
    const now = this.ctx.currentTime;
    if (this.nextTime < now) {
      // underrun: restart the timeline with a small safety margin
      this.nextTime = now + 0.02;
    }
    src.start(this.nextTime);
    this.nextTime += samples.length / this.sampleRate;
  }

  async resume(): Promise<void> {
    if (this.ctx.state === "suspended") await this.ctx.resume();
  }

  async close(): Promise<void> {
    await this.ctx.close();
  }
}
