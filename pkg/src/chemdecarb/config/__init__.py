"""Configuration: path discovery, TOML settings and packaged default inputs."""
