//! Solution files with integer or named points.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use serde_json::Value;

use mpl2_core::{Permutation, Solution};

/// A parsed solution and, when the file used names, the name of each point.
pub struct Labeled {
    pub solution: Solution,
    pub names: Option<Vec<String>>,
}

impl Labeled {
    /// Name → index map for echoing in reports.
    pub fn mapping(&self) -> Option<BTreeMap<String, usize>> {
        self.names
            .as_ref()
            .map(|names| names.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect())
    }

    /// Parses cycle notation, translating names when the file used them.
    pub fn permutation(&self, text: &str) -> Result<Permutation, String> {
        let n = self.solution.n();
        let translated = match &self.names {
            None => text.to_string(),
            Some(names) => translate_cycles(text, names)?,
        };
        Permutation::from_cycles(n, &translated).map_err(|e| e.to_string())
    }
}

fn translate_cycles(text: &str, names: &[String]) -> Result<String, String> {
    let mut out = String::new();
    let mut token = String::new();
    let flush = |token: &mut String, out: &mut String| -> Result<(), String> {
        let t = token.trim();
        if !t.is_empty() {
            let idx = names
                .iter()
                .position(|n| n == t)
                .ok_or_else(|| format!("unknown point name {t:?}"))?;
            out.push_str(&idx.to_string());
        }
        token.clear();
        Ok(())
    };
    let trimmed = text.trim();
    if trimmed == "id" || trimmed.is_empty() {
        return Ok(trimmed.to_string());
    }
    for ch in trimmed.chars() {
        match ch {
            '(' | ')' | ',' => {
                flush(&mut token, &mut out)?;
                out.push(ch);
            }
            c if c.is_whitespace() => {}
            c => token.push(c),
        }
    }
    flush(&mut token, &mut out)?;
    Ok(out)
}

fn table(value: &Value, key: &str) -> Result<Vec<Vec<Value>>, String> {
    let rows = value
        .get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| format!("missing array {key:?}"))?;
    rows.iter()
        .map(|r| {
            r.as_array()
                .cloned()
                .ok_or_else(|| format!("{key} rows must be arrays"))
        })
        .collect()
}

/// Reads `{"n":…,"sigma":[[…]],"tau":[[…]]}` where `sigma[x][y] = σ_x(y)` and
/// `tau[y][x] = τ_y(x)`. Entries are integers or point names; names are
/// numbered in the order of an optional `"points"` array, else sorted.
pub fn parse_solution(value: &Value) -> Result<Labeled, String> {
    let sigma = table(value, "sigma")?;
    let tau = table(value, "tau")?;
    let cells = sigma.iter().chain(&tau).flatten();
    let named = cells.clone().any(Value::is_string);
    let names: Option<Vec<String>> = if named {
        let names = match value.get("points") {
            Some(Value::Array(points)) => points
                .iter()
                .map(|p| p.as_str().map(str::to_string).ok_or("points must be strings".to_string()))
                .collect::<Result<Vec<_>, _>>()?,
            _ => {
                let mut all: Vec<String> = cells
                    .clone()
                    .map(|c| c.as_str().map(str::to_string).ok_or("cannot mix names and integers".to_string()))
                    .collect::<Result<_, _>>()?;
                all.sort();
                all.dedup();
                all
            }
        };
        Some(names)
    } else {
        None
    };
    let index = |cell: &Value| -> Result<usize, String> {
        match (cell, &names) {
            (Value::Number(num), None) => num
                .as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| format!("bad table entry {cell}")),
            (Value::String(s), Some(names)) => names
                .iter()
                .position(|n| n == s)
                .ok_or_else(|| format!("unknown point name {s:?}")),
            _ => Err(format!("bad table entry {cell}")),
        }
    };
    let convert = |rows: &[Vec<Value>]| -> Result<Vec<Vec<usize>>, String> {
        rows.iter().map(|r| r.iter().map(index).collect()).collect()
    };
    let sigma = convert(&sigma)?;
    let tau = convert(&tau)?;
    let n = match value.get("n") {
        Some(v) => v.as_u64().ok_or("n must be a non-negative integer")? as usize,
        None => sigma.len(),
    };
    let solution = Solution::new(n, &sigma, &tau).map_err(|e| e.to_string())?;
    Ok(Labeled { solution, names })
}

pub fn read_solution(path: &Path) -> Result<Labeled, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_solution(&value).map_err(|e| format!("{}: {e}", path.display()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn integer_tables() {
        let v = json!({"n": 2, "sigma": [[1, 0], [1, 0]], "tau": [[0, 1], [0, 1]]});
        let l = parse_solution(&v).unwrap();
        assert!(l.names.is_none());
        assert_eq!(l.solution.s(0, 0), 1);
    }

    #[test]
    fn named_tables() {
        let v = json!({
            "sigma": [["a","b","d","c"], ["a","b","d","c"], ["b","a","c","d"], ["b","a","c","d"]],
            "tau": [["a","b","d","c"], ["a","b","d","c"], ["b","a","c","d"], ["b","a","c","d"]]
        });
        let l = parse_solution(&v).unwrap();
        assert_eq!(l.names.as_ref().unwrap(), &["a", "b", "c", "d"]);
        assert_eq!(l.solution, mpl2_core::samples::two_block_base());
        assert_eq!(l.permutation("(a,c,b,d)").unwrap().to_cycles(), "(0,2,1,3)");
        assert_eq!(l.permutation("id").unwrap().to_cycles(), "id");
        assert!(l.permutation("(a,e)").is_err());
        assert_eq!(l.mapping().unwrap()["d"], 3);
    }

    #[test]
    fn explicit_point_order() {
        let v = json!({"points": ["y", "x"], "sigma": [["x","y"], ["x","y"]], "tau": [["y","x"], ["y","x"]]});
        let l = parse_solution(&v).unwrap();
        // y = 0, x = 1: sigma rows are (0,1)
        assert_eq!(l.solution.s(0, 0), 1);
    }

    #[test]
    fn malformed() {
        assert!(parse_solution(&json!({"sigma": [[0]]})).is_err());
        assert!(parse_solution(&json!({"sigma": [[0, "a"]], "tau": [[0]]})).is_err());
        assert!(parse_solution(&json!({"sigma": [[0, 0], [0, 1]], "tau": [[0, 1], [0, 1]]})).is_err());
    }
}
