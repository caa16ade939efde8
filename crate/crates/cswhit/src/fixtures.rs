//! Built-in root-datum fixtures and loading of external ones.
//!
//! The six built-in fixtures cover the small-rank landscape the test suite
//! and the verification harness run against. Each is constructed from a
//! Cartan label and a lattice variant (the variant names the isogeny type
//! of the dual group, see `rootdata`):
//!
//! | key     | label | `X_*`            | notes                              |
//! |---------|-------|------------------|------------------------------------|
//! | `SL2`   | A1    | coroot lattice   | one root `alpha = 2 alpha^vee`     |
//! | `PGL2`  | A1    | coweight lattice | generator `mu_0`, `alpha^vee = 2 mu_0` |
//! | `A2adj` | A2    | coroot lattice   | hexagonal root system              |
//! | `B2`    | B2    | coweight lattice | has a minuscule cocharacter        |
//! | `C2`    | C2    | coweight lattice | dual orientation of `B2`           |
//! | `G2`    | G2    | coroot lattice   | both lattices coincide             |
//!
//! Setting `CSWHIT_FIXTURES` to a directory lets callers add or override
//! fixtures: a key `K` first resolves to `K.json` in that directory, a file
//! holding `{"simple_roots": [[..]], "simple_coroots": [[..]]}` in fixed
//! bases, and falls back to the built-in table.

use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::rootdata::{BuildOptions, CartanType, LatticeVariant, RootDatum};

/// Environment variable naming a directory of explicit fixture files.
pub const FIXTURES_ENV: &str = "CSWHIT_FIXTURES";

pub const FIXTURE_KEYS: [&str; 6] = ["SL2", "PGL2", "A2adj", "B2", "C2", "G2"];

#[derive(Debug, Deserialize)]
struct ExplicitFile {
    simple_roots: Vec<Vec<i64>>,
    simple_coroots: Vec<Vec<i64>>,
}

/// Resolve a fixture key with default build options, honoring the
/// `CSWHIT_FIXTURES` directory if the variable is set.
pub fn fixture(key: &str) -> Result<RootDatum> {
    fixture_with(key, env_dir().as_deref(), &BuildOptions::default())
}

/// Resolve a fixture key with explicit build options, honoring the
/// `CSWHIT_FIXTURES` directory if the variable is set.
pub fn fixture_with_options(key: &str, opts: &BuildOptions) -> Result<RootDatum> {
    fixture_with(key, env_dir().as_deref(), opts)
}

/// Resolve a fixture key against an explicit directory (`None` disables the
/// file lookup) and explicit build options.
pub fn fixture_with(key: &str, dir: Option<&Path>, opts: &BuildOptions) -> Result<RootDatum> {
    if let Some(dir) = dir {
        let candidate = dir.join(format!("{key}.json"));
        if candidate.exists() {
            return load_explicit_file(&candidate, key, opts);
        }
    }
    builtin(key, opts)
}

fn builtin(key: &str, opts: &BuildOptions) -> Result<RootDatum> {
    let (kind, variant) = match key {
        "SL2" => (CartanType::A(1), LatticeVariant::Adjoint),
        "PGL2" => (CartanType::A(1), LatticeVariant::SimplyConnected),
        "A2adj" => (CartanType::A(2), LatticeVariant::Adjoint),
        "B2" => (CartanType::B(2), LatticeVariant::SimplyConnected),
        "C2" => (CartanType::C(2), LatticeVariant::SimplyConnected),
        "G2" => (CartanType::G2, LatticeVariant::Adjoint),
        _ => return Err(Error::UnknownFixture(key.to_string())),
    };
    RootDatum::from_label(kind, variant, key, opts)
}

/// Load a root datum from an explicit JSON file.
pub fn load_explicit_file(path: &Path, name: &str, opts: &BuildOptions) -> Result<RootDatum> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::FixtureIo {
        path: path.display().to_string(),
        source,
    })?;
    let file: ExplicitFile = serde_json::from_str(&text).map_err(|source| Error::FixtureJson {
        path: path.display().to_string(),
        source,
    })?;
    RootDatum::from_explicit(&file.simple_roots, &file.simple_coroots, name, opts)
}

fn env_dir() -> Option<PathBuf> {
    std::env::var_os(FIXTURES_ENV).map(PathBuf::from)
}

/// All built-in fixtures, in table order.
pub fn all_fixtures() -> Vec<RootDatum> {
    FIXTURE_KEYS
        .iter()
        .map(|key| builtin(key, &BuildOptions::default()).expect("built-in fixtures must build"))
        .collect()
}
