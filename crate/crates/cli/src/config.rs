use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use qdeform::algebra::{AlgebraContext, Mode};

/// Settings resolved from defaults, an optional `key=value` file and
/// command-line flags, in increasing priority.
#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub n: usize,
    pub mode: Mode,
    pub trials: usize,
    pub seed: u64,
    pub out: Option<PathBuf>,
    pub family: String,
    pub a: String,
    pub c: String,
    pub palpha: Option<String>,
    pub pbeta: String,
    pub signs: String,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            n: 2,
            mode: Mode::OneParam,
            trials: 20,
            seed: 0,
            out: None,
            family: "B".into(),
            a: "symbolic".into(),
            c: "symbolic".into(),
            palpha: None,
            pbeta: "0".into(),
            signs: "printed".into(),
        }
    }
}

fn parse_num<T: FromStr>(key: &str, v: &str) -> Result<T, String> {
    v.trim()
        .parse()
        .map_err(|_| format!("invalid value `{v}` for `{key}`"))
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        let v = value.trim();
        match key {
            "n" => self.n = parse_num(key, v)?,
            "mode" => self.mode = v.parse().map_err(|e| format!("{e}"))?,
            "trials" => self.trials = parse_num(key, v)?,
            "seed" => self.seed = parse_num(key, v)?,
            "out" => self.out = Some(PathBuf::from(v)),
            "family" => self.family = v.to_string(),
            "a" => self.a = v.to_string(),
            "c" => self.c = v.to_string(),
            "palpha" => self.palpha = Some(v.to_string()),
            "pbeta" => self.pbeta = v.to_string(),
            "signs" => self.signs = v.to_string(),
            other => return Err(format!("unknown config key `{other}`")),
        }
        Ok(())
    }

    /// Reads `key = value` lines; blank lines and `#` comments are skipped.
    pub fn load_file(&mut self, path: &Path) -> Result<(), String> {
        let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
        for (i, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((k, v)) = line.split_once('=') else {
                return Err(format!("{}:{}: expected key=value", path.display(), i + 1));
            };
            self.set(k.trim(), v).map_err(|e| format!("{}:{}: {e}", path.display(), i + 1))?;
        }
        Ok(())
    }

    pub fn context(&self) -> Result<AlgebraContext, String> {
        AlgebraContext::new(self.n, self.mode).map_err(|e| e.to_string())
    }

    pub fn validate(&self) -> Result<(), String> {
        self.context()?;
        if self.trials == 0 {
            return Err("trials must be at least 1".into());
        }
        if !["A", "B", "duality"].contains(&self.family.as_str()) {
            return Err(format!("unknown family `{}` (expected A, B or duality)", self.family));
        }
        if !["printed", "corrected"].contains(&self.signs.as_str()) {
            return Err(format!("unknown sign convention `{}`", self.signs));
        }
        Ok(())
    }

    pub fn describe(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        m.insert("n".into(), self.n.to_string());
        m.insert("mode".into(), self.mode.to_string());
        m.insert("trials".into(), self.trials.to_string());
        m.insert("seed".into(), self.seed.to_string());
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_then_flags() {
        let dir = std::env::temp_dir().join(format!("qdeform-config-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("run.conf");
        fs::write(&path, "# comment\nn = 3\ntrials=5\nmode = one-param\n").unwrap();
        let mut cfg = RunConfig::default();
        cfg.load_file(&path).unwrap();
        assert_eq!(cfg.n, 3);
        assert_eq!(cfg.trials, 5);
        cfg.set("n", "4").unwrap();
        assert_eq!(cfg.n, 4);
        assert!(cfg.set("bogus", "1").is_err());
        assert!(cfg.set("n", "x").is_err());
        fs::remove_dir_all(dir).unwrap();
    }

    #[test]
    fn validation() {
        let mut cfg = RunConfig::default();
        assert!(cfg.validate().is_ok());
        cfg.n = 3;
        cfg.mode = Mode::TwoParam;
        assert!(cfg.validate().is_err());
        let cfg = RunConfig {
            family: "C".into(),
            ..RunConfig::default()
        };
        assert!(cfg.validate().is_err());
    }
}
