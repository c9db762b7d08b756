//! Browser bindings: interpret a diagram term, run the rule verifier, and
//! translate between the calculi. Everything returns plain text so the demo
//! page stays framework-free.
//!
//! The `wasm_bindgen` exports are thin wrappers over the string-based
//! functions in [`api`], which also run on native targets for testing.

use wasm_bindgen::prelude::*;

pub mod api {
    use zwcalc::format;
    use zwcalc::interpret::interpret_with_limit;
    use zwcalc::rules::{self, VERIFY_ENTRY_LIMIT};
    use zwcalc::translate::{self, Direction};

    /// Evaluate a diagram term at wire dimension `dim`; returns the matrix
    /// as a signature header plus aligned complex entries.
    pub fn interpret_term(term: &str, dim: usize) -> Result<String, String> {
        let diagram = format::parse(term.trim(), dim).map_err(|e| e.to_string())?;
        let matrix =
            interpret_with_limit(&diagram, VERIFY_ENTRY_LIMIT).map_err(|e| e.to_string())?;
        let mut out = format!(
            "{} -> {}   ({} x {})\n\n",
            diagram.dom(),
            diagram.cod(),
            matrix.rows(),
            matrix.cols()
        );
        out.push_str(&matrix.to_string());
        Ok(out)
    }

    /// Run the soundness verifier over comma-separated dimensions; one line
    /// per rule and dimension plus a summary.
    pub fn verify_rules(
        dims: &str,
        trials: usize,
        seed: u64,
        include_lemmas: bool,
        include_qufinite: bool,
    ) -> Result<String, String> {
        let dims: Vec<usize> = dims
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>()
                    .ok()
                    .filter(|&d| (2..=6).contains(&d))
                    .ok_or_else(|| format!("bad dimension '{s}' (use integers 2..6)"))
            })
            .collect::<Result<_, _>>()?;
        if dims.is_empty() {
            return Err("no dimensions given".to_string());
        }

        let mut selected = rules::catalog();
        if include_lemmas {
            selected.extend(rules::lemma_catalog());
        }
        if include_qufinite {
            selected.extend(zwcalc::qufinite::qufinite_catalog());
        }

        let mut out = String::new();
        let mut reports = Vec::new();
        for rule in &selected {
            for &d in &dims {
                let report = rules::verify(rule, d, trials.clamp(1, 50), 1e-9, seed);
                out.push_str(&format::report_line(&report));
                out.push('\n');
                reports.push(report);
            }
        }
        out.push('\n');
        out.push_str(&format::report_summary(&reports));
        Ok(out)
    }

    /// Translate a term ("xw": ZX into ZW, "wx": ZW into ZX) and report
    /// whether the interpretation was preserved.
    pub fn translate_term(term: &str, dim: usize, direction: &str) -> Result<String, String> {
        let direction = Direction::parse(direction).ok_or("direction must be 'xw' or 'wx'")?;
        let diagram = format::parse(term.trim(), dim).map_err(|e| e.to_string())?;
        let source_ok = match direction {
            Direction::Xw => diagram.is_zx(),
            Direction::Wx => diagram.is_zw(),
        };
        if !source_ok {
            return Err(match direction {
                Direction::Xw => "term is not a pure zx diagram".to_string(),
                Direction::Wx => "term is not a pure zw diagram".to_string(),
            });
        }
        let image = translate::translate(&diagram, direction).map_err(|e| e.to_string())?;
        let preserved =
            translate::check_preservation(&diagram, direction, 1e-9).map_err(|e| e.to_string())?;
        let mut out = format::print(&image).map_err(|e| e.to_string())?;
        out.push_str(&format!(
            "\n\ninterpretation preserved: {} (max deviation {:.3e})",
            if preserved.semantic_pass { "yes" } else { "NO" },
            preserved.max_deviation
        ));
        Ok(out)
    }

    /// Deviation of the unsound W-W bialgebra shape at `dim`.
    pub fn bialgebra_deviation(dim: usize) -> Result<String, String> {
        if !(2..=6).contains(&dim) {
            return Err("dimension must be in 2..6".to_string());
        }
        let deviation = rules::bialgebra_counterexample(dim).map_err(|e| e.to_string())?;
        Ok(format!("{deviation:.6}"))
    }
}

#[wasm_bindgen]
pub fn interpret_term(term: &str, dim: usize) -> Result<String, JsValue> {
    api::interpret_term(term, dim).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn verify_rules(
    dims: &str,
    trials: usize,
    seed: u64,
    include_lemmas: bool,
    include_qufinite: bool,
) -> Result<String, JsValue> {
    api::verify_rules(dims, trials, seed, include_lemmas, include_qufinite)
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn translate_term(term: &str, dim: usize, direction: &str) -> Result<String, JsValue> {
    api::translate_term(term, dim, direction).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn bialgebra_deviation(dim: usize) -> Result<String, JsValue> {
    api::bialgebra_deviation(dim).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::api;

    #[test]
    fn interpret_term_renders_shape_and_matrix() {
        let text = api::interpret_term("(w)", 2).unwrap();
        assert!(text.starts_with("[2] -> [2,2]"));
        assert!(text.contains("+1.000"));
    }

    #[test]
    fn verify_rules_reports_summary() {
        let text = api::verify_rules("2", 1, 42, false, false).unwrap();
        assert!(text.contains("verified 30 cells: 30 passed, 0 failed"));
    }

    #[test]
    fn translate_term_checks_the_source_calculus() {
        assert!(api::translate_term("(tau)", 2, "xw").is_err());
        let text = api::translate_term("(tau)", 2, "wx").unwrap();
        assert!(text.contains("interpretation preserved: yes"));
    }

    #[test]
    fn bialgebra_deviation_matches_the_frozen_values() {
        assert_eq!(api::bialgebra_deviation(3).unwrap(), "1.000000");
        assert_eq!(api::bialgebra_deviation(4).unwrap(), "2.000000");
    }
}
