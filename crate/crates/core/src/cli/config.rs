//! Settings: defaults, then a `key = value` file, then flags, then `TVF_*`
//! environment variables.

use std::path::{Path, PathBuf};

use crate::cli::CliError;
use crate::relations::DEFAULT_WEIGHT_CAP;

/// Highest weight at which span membership is attempted.
pub const DEFAULT_SYMBOLIC_CAP: u32 = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub digits: u32,
    pub weight_cap: u32,
    pub symbolic_cap: u32,
    pub cache_dir: PathBuf,
    /// Worker threads; 0 lets rayon decide.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            digits: 30,
            weight_cap: DEFAULT_WEIGHT_CAP,
            symbolic_cap: DEFAULT_SYMBOLIC_CAP,
            cache_dir: PathBuf::from(".tvf-cache"),
            threads: 0,
        }
    }
}

/// Values given on the command line.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub digits: Option<u32>,
    pub weight_cap: Option<u32>,
    pub symbolic_cap: Option<u32>,
    pub cache_dir: Option<PathBuf>,
    pub threads: Option<usize>,
}

fn parse_num<T: std::str::FromStr>(key: &str, value: &str) -> Result<T, CliError> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::Config(format!("{key}: not a number: {value:?}")))
}

impl Config {
    fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "digits" => self.digits = parse_num(key, value)?,
            "weight_cap" => self.weight_cap = parse_num(key, value)?,
            "symbolic_cap" => self.symbolic_cap = parse_num(key, value)?,
            "cache_dir" => self.cache_dir = PathBuf::from(value.trim()),
            "threads" => self.threads = parse_num(key, value)?,
            _ => return Err(CliError::Config(format!("unknown key {key:?}"))),
        }
        Ok(())
    }

    /// Reads `key = value` lines; `#` starts a comment.
    pub fn apply_file_text(&mut self, text: &str) -> Result<(), CliError> {
        for (n, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected key = value", n + 1)))?;
            self.set(k.trim(), v)?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        self.apply_file_text(&text)
    }

    pub fn apply_overrides(&mut self, o: &Overrides) {
        if let Some(d) = o.digits {
            self.digits = d;
        }
        if let Some(c) = o.weight_cap {
            self.weight_cap = c;
        }
        if let Some(c) = o.symbolic_cap {
            self.symbolic_cap = c;
        }
        if let Some(p) = &o.cache_dir {
            self.cache_dir = p.clone();
        }
        if let Some(t) = o.threads {
            self.threads = t;
        }
    }

    /// `TVF_DIGITS`, `TVF_WEIGHT_CAP`, `TVF_SYMBOLIC_CAP`, `TVF_CACHE_DIR`,
    /// `TVF_THREADS`.
    pub fn apply_env(&mut self, env: &dyn Fn(&str) -> Option<String>) -> Result<(), CliError> {
        for key in [
            "digits",
            "weight_cap",
            "symbolic_cap",
            "cache_dir",
            "threads",
        ] {
            if let Some(v) = env(&format!("TVF_{}", key.to_ascii_uppercase())) {
                self.set(key, &v)?;
            }
        }
        Ok(())
    }

    /// All layers in order. The file comes from `file` or `TVF_CONFIG`.
    pub fn resolve(
        file: Option<&Path>,
        flags: &Overrides,
        env: &dyn Fn(&str) -> Option<String>,
    ) -> Result<Config, CliError> {
        let mut cfg = Config::default();
        let from_env = env("TVF_CONFIG").map(PathBuf::from);
        if let Some(path) = file.map(Path::to_path_buf).or(from_env) {
            cfg.apply_file(&path)?;
        }
        cfg.apply_overrides(flags);
        cfg.apply_env(env)?;
        Ok(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layers_apply_in_order() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("tvf.conf");
        std::fs::write(
            &path,
            "# settings\ndigits = 25\nthreads = 2\ncache_dir = /tmp/x\n",
        )
        .unwrap();
        let flags = Overrides {
            digits: Some(35),
            threads: Some(3),
            ..Overrides::default()
        };
        let env = |k: &str| (k == "TVF_THREADS").then(|| "4".to_string());
        let cfg = Config::resolve(Some(&path), &flags, &env).unwrap();
        assert_eq!(cfg.digits, 35);
        assert_eq!(cfg.threads, 4);
        assert_eq!(cfg.cache_dir, PathBuf::from("/tmp/x"));
        assert_eq!(cfg.weight_cap, DEFAULT_WEIGHT_CAP);
    }

    #[test]
    fn bad_lines_are_errors() {
        let mut cfg = Config::default();
        assert!(cfg.apply_file_text("digits 30").is_err());
        assert!(cfg.apply_file_text("colour = red").is_err());
        assert!(cfg.apply_file_text("digits = many").is_err());
    }
}
