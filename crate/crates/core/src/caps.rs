//! Size limits for the enumeration-heavy operations.
//!
//! Defaults can be overridden process-wide through the `GSPKIT_CAPS`
//! environment variable, e.g. `GSPKIT_CAPS="circuits=22,certify=14"`.

use std::sync::OnceLock;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Caps {
    pub circuits: usize,
    pub isomorphism: usize,
    pub k4_minor: usize,
    pub clone_pairs: usize,
    pub clone_order: usize,
    pub clone_exhaustive: usize,
    pub certify: usize,
    pub nz3: usize,
    pub bicircular_circuits: usize,
    pub dc_direct: usize,
    pub dc_dual: usize,
    pub realize: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            circuits: 20,
            isomorphism: 12,
            k4_minor: 14,
            clone_pairs: 20,
            clone_order: 16,
            clone_exhaustive: 10,
            certify: 12,
            nz3: 12,
            bicircular_circuits: 24,
            dc_direct: 20,
            dc_dual: 32,
            realize: 20,
        }
    }
}

static GLOBAL: OnceLock<Caps> = OnceLock::new();

impl Caps {
    /// Parses `key=value` pairs separated by commas on top of the defaults.
    pub fn parse_overrides(overrides: &str) -> Result<Caps> {
        let mut caps = Caps::default();
        for item in overrides.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("cap override `{item}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::invalid(format!("cap override `{item}` has a non-integer value")))?;
            let slot = match key.trim() {
                "circuits" => &mut caps.circuits,
                "isomorphism" => &mut caps.isomorphism,
                "k4_minor" => &mut caps.k4_minor,
                "clone_pairs" => &mut caps.clone_pairs,
                "clone_order" => &mut caps.clone_order,
                "clone_exhaustive" => &mut caps.clone_exhaustive,
                "certify" => &mut caps.certify,
                "nz3" => &mut caps.nz3,
                "bicircular_circuits" => &mut caps.bicircular_circuits,
                "dc_direct" => &mut caps.dc_direct,
                "dc_dual" => &mut caps.dc_dual,
                "realize" => &mut caps.realize,
                other => return Err(Error::invalid(format!("unknown cap `{other}`"))),
            };
            *slot = value.min(64);
        }
        Ok(caps)
    }

    /// The process-wide caps: `GSPKIT_CAPS` if set and valid, else defaults.
    pub fn global() -> Caps {
        *GLOBAL.get_or_init(|| {
            std::env::var("GSPKIT_CAPS")
                .ok()
                .and_then(|s| Caps::parse_overrides(&s).ok())
                .unwrap_or_default()
        })
    }

    /// Installs `caps` as the process-wide value. Returns false if caps were
    /// already read (the first value wins).
    pub fn install(caps: Caps) -> bool {
        GLOBAL.set(caps).is_ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let c = Caps::parse_overrides("circuits=18, certify=9").unwrap();
        assert_eq!(c.circuits, 18);
        assert_eq!(c.certify, 9);
        assert_eq!(c.nz3, Caps::default().nz3);
        assert!(Caps::parse_overrides("bogus=1").is_err());
        assert!(Caps::parse_overrides("circuits").is_err());
    }
}
