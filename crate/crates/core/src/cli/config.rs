use std::path::{Path, PathBuf};

use bondle_core::algebra::{
    dihedral_group, group::symmetric_group, AffineParams, Bondle, BondleTable, GroupFamily, R3Variant,
};
use bondle_core::coloring::default_battery;
use serde::Deserialize;

use super::{CliError, Format};

/// Optional settings read from a JSON file. Every field has a default.
#[derive(Clone, Debug, Deserialize, PartialEq, Eq)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    /// Bondle specs (see [`load_bondle`]); empty means the built-in battery.
    pub battery: Vec<String>,
    pub max_n: u64,
    pub max_arcs: usize,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config { battery: Vec::new(), max_n: 15, max_arcs: 30, format: Format::Json }
    }
}

impl Config {
    /// Reads `explicit`, else the file named by `BONDLE_CONFIG`, else
    /// returns the defaults.
    pub fn load(explicit: Option<&Path>) -> Result<Config, CliError> {
        let path = match explicit {
            Some(p) => Some(p.to_path_buf()),
            None => std::env::var_os("BONDLE_CONFIG").filter(|v| !v.is_empty()).map(PathBuf::from),
        };
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text = super::read_path(&path)?;
        let config: Config = serde_json::from_str(&text)
            .map_err(|e| CliError::validation(format!("{}: {e}", path.display())))?;
        if config.max_n < 2 || config.max_arcs == 0 {
            return Err(CliError::validation(format!("{}: bounds must be positive", path.display())));
        }
        Ok(config)
    }

    pub fn battery(&self) -> Result<Vec<Bondle>, CliError> {
        if self.battery.is_empty() {
            return Ok(default_battery());
        }
        self.battery.iter().map(|s| load_bondle(s)).collect()
    }
}

fn numbers(list: &str) -> Result<Vec<u64>, CliError> {
    list.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| CliError::validation(format!("bad number {t:?}"))))
        .collect()
}

/// Resolves a bondle spec:
///
/// * `affine:n,a,b,m`
/// * `group:NAME,family,n,r3` with `NAME` one of `D3`..`D8`, `S3`, family
///   1 to 3 and `r3` either `x2y-1` or `x-1y2`
/// * otherwise a path to a table file.
pub fn load_bondle(spec: &str) -> Result<Bondle, CliError> {
    if let Some(rest) = spec.strip_prefix("affine:") {
        let v = numbers(rest)?;
        let [n, a, b, m] = v[..] else {
            return Err(CliError::validation(format!("affine spec needs n,a,b,m: {spec:?}")));
        };
        let p = AffineParams::new(n, a, b, Some(m)).map_err(|e| CliError::validation(e.to_string()))?;
        return Bondle::affine(p).map_err(|e| CliError::validation(e.to_string()));
    }
    if let Some(rest) = spec.strip_prefix("group:") {
        let parts: Vec<&str> = rest.split(',').map(str::trim).collect();
        let [name, family, n, r3] = parts[..] else {
            return Err(CliError::validation(format!("group spec needs NAME,family,n,r3: {spec:?}")));
        };
        let g = match name {
            "S3" => symmetric_group(3),
            d if d.starts_with('D') => match d[1..].parse::<usize>() {
                Ok(k) if (3..=8).contains(&k) => dihedral_group(k),
                _ => return Err(CliError::validation(format!("unknown group {name:?}"))),
            },
            _ => return Err(CliError::validation(format!("unknown group {name:?}"))),
        };
        let family = family
            .parse::<u8>()
            .ok()
            .and_then(GroupFamily::from_index)
            .ok_or_else(|| CliError::validation(format!("family must be 1, 2 or 3: {family:?}")))?;
        let n: u32 = n.parse().map_err(|_| CliError::validation(format!("bad exponent {n:?}")))?;
        let r3 = match r3 {
            "x2y-1" => R3Variant::SquareLeft,
            "x-1y2" => R3Variant::SquareRight,
            _ => return Err(CliError::validation(format!("r3 must be x2y-1 or x-1y2: {r3:?}"))),
        };
        return Ok(Bondle::group(&g, name, family, n, r3));
    }
    let text = super::read_path(Path::new(spec))?;
    let table = BondleTable::from_json(&text).map_err(|e| CliError::validation(format!("{spec}: {e}")))?;
    Bondle::from_table(spec, &table).map_err(|e| CliError::validation(format!("{spec}: {e}")))
}
