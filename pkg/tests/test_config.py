from limweight.core.config.settings import Settings


def test_settings_read_env_files(tmp_path, monkeypatch):
    monkeypatch.delenv("LIMWEIGHT_THREADS", raising=False)
    monkeypatch.delenv("LIMWEIGHT_SEED", raising=False)
    env = tmp_path / ".env.local"
    env.write_text("LIMWEIGHT_THREADS=2\nLIMWEIGHT_SEED=11\nUNRELATED=1\n", encoding="utf-8")
    loaded = Settings(_env_file=(str(env),), _env_file_encoding="utf-8")
    assert (loaded.THREADS, loaded.SEED) == (2, 11)


def test_environment_overrides_env_files(tmp_path, monkeypatch):
    env = tmp_path / ".env"
    env.write_text("LIMWEIGHT_VERIFY_CASES=50\n", encoding="utf-8")
    monkeypatch.setenv("LIMWEIGHT_VERIFY_CASES", "80")
    assert Settings(_env_file=(str(env),)).VERIFY_CASES == 80
