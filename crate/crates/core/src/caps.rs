use crate::error::{invalid, Result};

/// Size caps for the exhaustive searches. Exceeding one is reported as
/// [`crate::Error::ResourceLimit`], never silently approximated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Vertex count for exact clique search.
    pub clique: usize,
    /// Vertex count for exact chromatic number.
    pub chromatic: usize,
    /// Element count for linear extension enumeration.
    pub extensions: usize,
    /// Vertex count for induced `K_{t,t}` search.
    pub ktt: usize,
    /// History length for exhaustive longest-sequence enumeration.
    pub sequence: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            clique: 40,
            chromatic: 15,
            extensions: 8,
            ktt: 40,
            sequence: 12,
        }
    }
}

pub const CAPS_ENV: &str = "STRIPCOLOR_CAPS";

impl Caps {
    /// Defaults overridden by `STRIPCOLOR_CAPS`, e.g. `clique=60,extensions=9`.
    pub fn from_env() -> Result<Self> {
        match std::env::var(CAPS_ENV) {
            Ok(spec) => Caps::default().with_overrides(&spec),
            Err(_) => Ok(Caps::default()),
        }
    }

    pub fn with_overrides(mut self, spec: &str) -> Result<Self> {
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| invalid(format!("cap override {item:?} is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| invalid(format!("cap override {item:?} has a non-integer value")))?;
            match key.trim() {
                "clique" => self.clique = value,
                "chromatic" => self.chromatic = value,
                "extensions" => self.extensions = value,
                "ktt" => self.ktt = value,
                "sequence" => self.sequence = value,
                other => return Err(invalid(format!("unknown cap {other:?}"))),
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overrides_parse() {
        let caps = Caps::default().with_overrides("clique=60, extensions=9").unwrap();
        assert_eq!(caps.clique, 60);
        assert_eq!(caps.extensions, 9);
        assert_eq!(caps.chromatic, 15);
        assert!(Caps::default().with_overrides("bogus=1").is_err());
        assert!(Caps::default().with_overrides("clique").is_err());
    }
}
