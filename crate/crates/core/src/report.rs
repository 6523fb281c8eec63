//! Text and structured renderings of a [`HullReport`].

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::gf::ElementStyle;
use crate::hull::{Classification, HullReport};
use crate::polymat::PolyMatrix;

impl Classification {
    fn key(self) -> &'static str {
        match self {
            Classification::SelfOrthogonal => "SelfOrthogonal",
            Classification::Lcd => "LCD",
            Classification::Intermediate => "Intermediate",
        }
    }
}

fn section(out: &mut String, name: &str, m: Option<&PolyMatrix>, style: ElementStyle) {
    match m {
        None => {
            let _ = writeln!(out, "{name}: n/a");
        }
        Some(m) => {
            let _ = writeln!(out, "{name}:");
            for line in m.to_string_with(style).lines() {
                let _ = writeln!(out, "  {line}");
            }
        }
    }
}

pub fn matrix_json(m: &PolyMatrix, style: ElementStyle) -> Value {
    json!(m.to_string_rows(style))
}

impl HullReport {
    pub fn to_text(&self, style: ElementStyle) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "kappa = {}", self.kappa);
        let _ = writeln!(s, "N = {}", self.n);
        let _ = writeln!(s, "assumption_ok = {}", self.assumption_ok);
        let _ = writeln!(s, "dim_code = {}", self.dim_code);
        let _ = writeln!(s, "dim_qg = {}", self.dim_qg);
        let _ = writeln!(s, "dim_hull = {}", self.dim_hull);
        let _ = writeln!(s, "gcd_degree = {}", self.gcd_degree);
        let _ = writeln!(s, "classification = {}", self.classification.label());
        section(&mut s, "code_gpm", Some(&self.code_gpm), style);
        section(&mut s, "b_matrix", Some(&self.b_matrix), style);
        section(&mut s, "qg_gpm", Some(&self.qg_gpm), style);
        section(&mut s, "qg_identical", Some(&self.qg_identical), style);
        section(&mut s, "qg_dual_gpm", self.qg_dual_gpm.as_ref(), style);
        section(&mut s, "hull_gpm", self.hull_gpm.as_ref(), style);
        s
    }

    pub fn to_json(&self, style: ElementStyle) -> Value {
        json!({
            "kappa": self.kappa,
            "N": self.n,
            "assumption_ok": self.assumption_ok,
            "code_gpm": matrix_json(&self.code_gpm, style),
            "b_matrix": matrix_json(&self.b_matrix, style),
            "qg_gpm": matrix_json(&self.qg_gpm, style),
            "qg_identical": matrix_json(&self.qg_identical, style),
            "qg_dual_gpm": self.qg_dual_gpm.as_ref().map(|m| matrix_json(m, style)),
            "hull_gpm": self.hull_gpm.as_ref().map(|m| matrix_json(m, style)),
            "gcd_degree": self.gcd_degree,
            "dim_code": self.dim_code,
            "dim_qg": self.dim_qg,
            "dim_hull": self.dim_hull,
            "classification": self.classification.key(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::FieldSpec;
    use crate::hull::{classify, AssumptionPolicy};
    use crate::mtcode::CodeSpec;

    #[test]
    fn renders_all_fields() {
        let f = FieldSpec::prime(2).unwrap();
        let spec = CodeSpec::full(&f, vec![3], vec![f.one()]).unwrap();
        let r = classify(&spec, 0, AssumptionPolicy::Strict).unwrap();
        let text = r.to_text(ElementStyle::Power);
        assert!(text.contains("classification = LCD"));
        assert!(text.contains("hull_gpm:\n  x^3 + 1"));
        let v = r.to_json(ElementStyle::Power);
        assert_eq!(v["classification"], "LCD");
        assert_eq!(v["N"], 3);
        assert_eq!(v["hull_gpm"][0][0], "x^3 + 1");
    }
}
