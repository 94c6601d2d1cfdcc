//! Text, JSON and LaTeX forms of a [`CHIdentity`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::identity::CHIdentity;
use crate::poly::SPoly;

fn power_text(k: usize) -> String {
    match k {
        0 => "I".into(),
        1 => "M".into(),
        _ => format!("M^{k}"),
    }
}

fn power_latex(k: usize) -> String {
    match k {
        0 => "I".into(),
        1 => "M".into(),
        _ => format!("M^{{{k}}}"),
    }
}

/// One coefficient per line, then the identity written out.
pub fn to_text(id: &CHIdentity) -> String {
    let n = id.n();
    let mut out = format!(
        "({},{}){} identity, n = {n}\n",
        id.p(),
        id.q(),
        if id.is_osp() { " osp" } else { "" }
    );
    for (j, c) in id.coeffs().iter().enumerate() {
        out.push_str(&format!("a{j} [{}] = {c}\n", power_text(n - j)));
    }
    let terms: Vec<String> = id
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .map(|(j, c)| format!("({c})*{}", power_text(n - j)))
        .collect();
    out.push_str(&terms.join(" + "));
    out.push_str(" = 0\n");
    out
}

pub fn to_latex(id: &CHIdentity) -> String {
    let n = id.n();
    let terms: Vec<String> = id
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_empty())
        .map(|(j, c)| {
            let body = c.to_latex();
            if c.len() == 1 {
                format!("{body}\\,{}", power_latex(n - j))
            } else {
                format!("\\left({body}\\right){}", power_latex(n - j))
            }
        })
        .collect();
    let mut out = terms.join("\n  + ");
    out.push_str(" = 0\n");
    out.replace("+ -", "- ")
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IdentityJson {
    p: usize,
    q: usize,
    #[serde(default)]
    osp: bool,
    coeffs: Vec<SPoly>,
}

pub fn to_json_value(id: &CHIdentity) -> serde_json::Value {
    serde_json::to_value(IdentityJson {
        p: id.p(),
        q: id.q(),
        osp: id.is_osp(),
        coeffs: id.coeffs().to_vec(),
    })
    .expect("serializable")
}

pub fn to_json(id: &CHIdentity) -> String {
    serde_json::to_string_pretty(&to_json_value(id)).expect("serializable")
}

pub fn from_json(s: &str) -> Result<CHIdentity> {
    let raw: IdentityJson = serde_json::from_str(s)?;
    if raw.p + raw.q > 64 {
        return Err(Error::Invalid(format!(
            "({},{}) is beyond the supported size",
            raw.p, raw.q
        )));
    }
    CHIdentity::from_parts(raw.p, raw.q, raw.coeffs, raw.osp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identity::identity_coeffs;

    #[test]
    fn one_one_forms() {
        let id = identity_coeffs(1, 1).unwrap();
        let text = to_text(&id);
        assert!(text.contains("a0 [M^2] = S1^2"), "{text}");
        assert!(text.contains("a1 [M] = -S1*S2"), "{text}");
        assert!(
            text.contains("(S1^2)*M^2 + (-S1*S2)*M + (-1/4*S1^4 + 1/4*S2^2)*I = 0"),
            "{text}"
        );
        let tex = to_latex(&id);
        assert!(tex.starts_with("{\\str_{1}}^{2}\\,M^{2}"), "{tex}");
        assert!(tex.contains("- \\str_{1}\\,\\str_{2}\\,M"), "{tex}");
        assert!(tex.contains("\\frac{1}{4}\\,{\\str_{2}}^{2}"), "{tex}");
    }

    #[test]
    fn json_round_trip() {
        for (p, q) in [(1, 1), (2, 1), (1, 2)] {
            let id = identity_coeffs(p, q).unwrap();
            assert_eq!(from_json(&to_json(&id)).unwrap(), id);
        }
        assert!(from_json("{\"p\":1,\"q\":1,\"coeffs\":[]}").is_err());
        assert!(from_json("{\"p\":1}").is_err());
        assert!(from_json("[]").is_err());
    }
}
