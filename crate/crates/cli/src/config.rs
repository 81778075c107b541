//! Flat `key=value` config files merged under command-line flags.

use std::fs;

/// Appends `--key value` for every config key not already given as a flag.
/// A `command=NAME` entry supplies the subcommand when none was given.
pub fn merge(args: Vec<String>, path: &str, subcommands: &[&str]) -> Result<Vec<String>, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("config {path}: {e}"))?;
    let mut out = args;
    let has_command = out.iter().skip(1).any(|a| subcommands.contains(&a.as_str()));
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| format!("config {path}:{}: expected key=value", lineno + 1))?;
        let (key, value) = (key.trim(), value.trim());
        if key == "command" {
            if !has_command {
                out.insert(1, value.to_string());
            }
            continue;
        }
        if key == "config" {
            continue;
        }
        let flag = format!("--{key}");
        let given = out.iter().any(|a| *a == flag || a.starts_with(&format!("{flag}=")));
        if given {
            continue;
        }
        match value {
            "true" => out.push(flag),
            "false" => {}
            v => {
                out.push(flag);
                out.push(v.to_string());
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    #[test]
    fn flags_override_file() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "# run settings\ncommand = verify\nenum=6\nconnected=true\nworkers=2\nseed=false").unwrap();
        let args = vec!["spectralab".to_string(), "--workers".into(), "1".into()];
        let merged = merge(args, f.path().to_str().unwrap(), &["verify"]).unwrap();
        assert_eq!(merged, ["spectralab", "verify", "--workers", "1", "--enum", "6", "--connected"]);
    }

    #[test]
    fn bad_lines_are_reported() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        writeln!(f, "enum 6").unwrap();
        assert!(merge(vec!["x".into()], f.path().to_str().unwrap(), &[]).unwrap_err().contains(":1:"));
        assert!(merge(vec!["x".into()], "/nonexistent/cfg", &[]).is_err());
    }
}
