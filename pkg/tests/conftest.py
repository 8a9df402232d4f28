import numpy as np
import pytest

from duomic.config import EnhanceConfig, SceneConfig, StftConfig
from duomic.signals import synthetic_speech, white_noise
from duomic.simulate import make_scene
from duomic.wavio import write_wav


@pytest.fixture
def stft_cfg():
    return StftConfig()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def speech():
    return synthetic_speech(4.0, seed=1)


@pytest.fixture
def noise():
    return white_noise(4.0, seed=2)


@pytest.fixture
def scene_0db(speech, noise):
    return make_scene(speech, noise, SceneConfig(theta=90.0, snr_db=0.0))


@pytest.fixture
def scene_wavs(tmp_path, scene_0db):
    """Stereo scene plus aligned references written as WAV files."""
    paths = {
        "stereo": tmp_path / "scene.wav",
        "clean": tmp_path / "clean.wav",
        "noisy": tmp_path / "noisy.wav",
    }
    stereo = np.stack([scene_0db.ch1, scene_0db.ch2], axis=1)
    write_wav(paths["stereo"], 16000, stereo, float_format=True)
    write_wav(paths["clean"], 16000, scene_0db.clean_ref, float_format=True)
    write_wav(paths["noisy"], 16000, scene_0db.ch1, float_format=True)
    return paths


@pytest.fixture
def default_cfg():
    return EnhanceConfig()
