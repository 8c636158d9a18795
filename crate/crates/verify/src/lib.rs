//! Acceptance checks for the bridgekit workspace live under `tests/`.
