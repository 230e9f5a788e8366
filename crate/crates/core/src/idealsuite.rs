//! Scenario-driven verification of ideal identities: one-parameter families,
//! their first-order limits `((I + (t²)) : t) + (t)`, embedded-point ideals
//! and membership checks.
//!
//! Scenarios are read from a plain-text manifest; the built-in one lives in
//! `data/limits.manifest`.

use std::collections::HashMap;
use std::fmt;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;
use wallcross_polyring::{parse_ideal_list, parse_polynomial_with, Ideal, PolyError, Polynomial, Ring};

use crate::rational::{parse_rational, Rational};

pub const BUILTIN_MANIFEST: &str = include_str!("../data/limits.manifest");
pub const MANIFEST_VERSION: u32 = 1;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuiteError {
    #[error("embedded point direction (a:b) must not be (0:0)")]
    ZeroDirection,
    #[error("q must vanish at the origin")]
    QNotThroughOrigin,
    #[error("ring needs variables x, y, z: {0}")]
    MissingCoordinates(String),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("manifest line {line}: {msg}")]
pub struct ManifestError {
    pub line: usize,
    pub msg: String,
}

/// `(x, y, z)·(q, z) + (b·q − a·z)`.
pub fn embedded_point_ideal(q: &Polynomial, a: &Rational, b: &Rational) -> Result<Ideal, SuiteError> {
    if a.is_zero() && b.is_zero() {
        return Err(SuiteError::ZeroDirection);
    }
    if !q.constant_term().is_zero() {
        return Err(SuiteError::QNotThroughOrigin);
    }
    let ring = q.ring();
    let coord = |name: &str| {
        Polynomial::var_named(ring, name).map_err(|_| SuiteError::MissingCoordinates(ring.to_string()))
    };
    let (x, y, z) = (coord("x")?, coord("y")?, coord("z")?);
    let m = Ideal::new(ring, vec![x, y, z.clone()]).expect("same ring");
    let curve = Ideal::new(ring, vec![q.clone(), z.clone()]).expect("same ring");
    let direction = &q.scale(b) - &z.scale(a);
    Ok(m.product(&curve).add_generators(&[direction]))
}

/// First-order limit of a family over `k[t]`: `((I + (t²)) : t) + (t)` with
/// `t` eliminated. The result stays in the ambient ring.
pub fn limit_ideal(family: &Ideal, t: usize) -> Ideal {
    let ring = family.ring();
    let tv = Polynomial::var(ring, t);
    let j = family.add_generators(&[&tv * &tv]);
    let k = j.colon(&tv).expect("t is nonzero").add_generators(&[tv]);
    k.eliminate(&[t])
}

pub fn restrict_to_plane(ideal: &Ideal, plane: &Polynomial) -> Ideal {
    ideal.add_generators(std::slice::from_ref(plane))
}

fn canonical(ideal: &Ideal) -> String {
    format!("({})", ideal.basis().to_strings().join(", "))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationStep {
    pub description: String,
    pub computed: String,
    pub expected: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub name: String,
    pub title: String,
    pub anchor: String,
    pub steps: Vec<VerificationStep>,
    pub pass: bool,
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        writeln!(f, "{} {}: {}", verdict, self.name, self.title)?;
        for step in &self.steps {
            let mark = if step.pass { "ok  " } else { "FAIL" };
            writeln!(f, "  [{mark}] {}", step.description)?;
            if !step.pass {
                writeln!(f, "         computed: {}", step.computed)?;
                writeln!(f, "         expected: {}", step.expected)?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
enum Check {
    Identity { lhs: String, rhs: String },
    Reduction(String),
    Restricted(String),
    Limit(String),
    Plane { plane: String, expect: String },
    Member { poly: String, ideal: String, at: Vec<(String, Rational)>, expected: bool },
}

#[derive(Clone, Debug)]
struct Variant {
    label: Option<String>,
    bindings: HashMap<String, Polynomial>,
}

/// A parsed manifest record.
#[derive(Clone, Debug)]
pub struct Scenario {
    pub name: String,
    pub title: String,
    pub anchor: String,
    ring: Ring,
    parameter: Option<usize>,
    variants: Vec<Variant>,
    family: Option<String>,
    restrict: Option<String>,
    checks: Vec<Check>,
}

/// The ideals of one scenario under one set of bindings.
#[derive(Clone, Debug)]
pub struct ScenarioInstance {
    pub label: Option<String>,
    pub parameter: Option<usize>,
    pub family: Option<Ideal>,
    pub restriction: Option<Ideal>,
    pub expected_limit: Option<Ideal>,
}

// ---------------------------------------------------------------------------
// ideal expressions

#[derive(Debug)]
enum Token<'a> {
    List(&'a str),
    Embedded(&'a str),
    Cap,
    Plus,
    Times,
    Pow(u32),
}

fn matching_paren(s: &str, open: usize) -> Option<usize> {
    let mut depth = 0usize;
    for (i, ch) in s[open..].char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(open + i);
                }
            }
            _ => {}
        }
    }
    None
}

fn tokenize(s: &str) -> Result<Vec<Token<'_>>, String> {
    let mut out = Vec::new();
    let mut i = 0;
    let bytes = s.as_bytes();
    while i < s.len() {
        let rest = &s[i..];
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
        } else if c == '(' {
            let end = matching_paren(s, i).ok_or("unbalanced parentheses")?;
            out.push(Token::List(&s[i..=end]));
            i = end + 1;
        } else if let Some(after) = rest.strip_prefix("embedded") {
            let open = i + "embedded".len() + (after.len() - after.trim_start().len());
            if bytes.get(open) != Some(&b'(') {
                return Err("expected `(` after embedded".into());
            }
            let end = matching_paren(s, open).ok_or("unbalanced parentheses")?;
            out.push(Token::Embedded(&s[open + 1..end]));
            i = end + 1;
        } else if rest.starts_with("cap") {
            out.push(Token::Cap);
            i += 3;
        } else if c == '+' {
            out.push(Token::Plus);
            i += 1;
        } else if c == '*' {
            out.push(Token::Times);
            i += 1;
        } else if c == '^' {
            let digits: String = rest[1..].trim_start().chars().take_while(char::is_ascii_digit).collect();
            let skipped = rest[1..].len() - rest[1..].trim_start().len();
            let n = digits.parse().map_err(|_| "expected an exponent after `^`")?;
            out.push(Token::Pow(n));
            i += 1 + skipped + digits.len();
        } else {
            return Err(format!("unexpected `{c}` in ideal expression"));
        }
    }
    Ok(out)
}

fn split_commas(s: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

struct ExprParser<'a, 'b> {
    tokens: Vec<Token<'a>>,
    pos: usize,
    ring: &'b Ring,
    bindings: &'b HashMap<String, Polynomial>,
}

impl ExprParser<'_, '_> {
    fn cap(&mut self) -> Result<Ideal, String> {
        let mut acc = self.sum()?;
        while matches!(self.tokens.get(self.pos), Some(Token::Cap)) {
            self.pos += 1;
            acc = acc.intersect(&self.sum()?);
        }
        Ok(acc)
    }

    fn sum(&mut self) -> Result<Ideal, String> {
        let mut acc = self.product()?;
        while matches!(self.tokens.get(self.pos), Some(Token::Plus)) {
            self.pos += 1;
            acc = acc.sum(&self.product()?);
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Ideal, String> {
        let mut acc = self.power()?;
        while matches!(self.tokens.get(self.pos), Some(Token::Times)) {
            self.pos += 1;
            acc = acc.product(&self.power()?);
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Ideal, String> {
        let base = self.atom()?;
        if let Some(Token::Pow(n)) = self.tokens.get(self.pos) {
            let n = *n;
            self.pos += 1;
            return Ok(base.power(n));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Ideal, String> {
        let tok = self.tokens.get(self.pos).ok_or("expected an ideal")?;
        self.pos += 1;
        match tok {
            Token::List(text) => {
                let gens = parse_ideal_list(self.ring, text, self.bindings).map_err(|e| e.to_string())?;
                Ok(Ideal::new(self.ring, gens).expect("parsed in this ring"))
            }
            Token::Embedded(args) => {
                let parts = split_commas(args);
                let [q, a, b] = parts.as_slice() else {
                    return Err("embedded(q, a, b) takes three arguments".into());
                };
                let q = parse_polynomial_with(self.ring, q, self.bindings).map_err(|e| e.to_string())?;
                let a = parse_rational(a).ok_or("embedded: a must be rational")?;
                let b = parse_rational(b).ok_or("embedded: b must be rational")?;
                embedded_point_ideal(&q, &a, &b).map_err(|e| e.to_string())
            }
            other => Err(format!("unexpected {other:?}")),
        }
    }
}

/// Evaluates an ideal expression such as `(y, z) cap (x - 1, y^2, z)`.
pub fn parse_ideal_expr(ring: &Ring, text: &str, bindings: &HashMap<String, Polynomial>) -> Result<Ideal, String> {
    let mut p = ExprParser {
        tokens: tokenize(text)?,
        pos: 0,
        ring,
        bindings,
    };
    let ideal = p.cap()?;
    if p.pos != p.tokens.len() {
        return Err(format!("trailing input in `{text}`"));
    }
    Ok(ideal)
}

// ---------------------------------------------------------------------------
// manifest parsing

fn poly_err(e: PolyError) -> String {
    e.to_string()
}

fn parse_binding(ring: &Ring, text: &str, bindings: &HashMap<String, Polynomial>) -> Result<(String, Polynomial), String> {
    let (name, value) = text.split_once('=').ok_or("expected `name = polynomial`")?;
    let name = name.trim();
    if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
        return Err(format!("bad binding name `{name}`"));
    }
    if ring.index_of(name).is_some() {
        return Err(format!("binding `{name}` shadows a ring variable"));
    }
    Ok((name.to_string(), parse_polynomial_with(ring, value, bindings).map_err(poly_err)?))
}

fn parse_member(text: &str, expected: bool) -> Result<Check, String> {
    let (poly, rest) = text.split_once(" in ").ok_or("expected `poly in ideal`")?;
    let (ideal, at) = match rest.split_once(" where ") {
        Some((ideal, at)) => (ideal, at),
        None => (rest, ""),
    };
    let mut values = Vec::new();
    for part in at.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (k, v) = part.split_once('=').ok_or("expected `name = value` after where")?;
        let v = parse_rational(v).ok_or_else(|| format!("`{}` is not rational", v.trim()))?;
        values.push((k.trim().to_string(), v));
    }
    Ok(Check::Member {
        poly: poly.trim().to_string(),
        ideal: ideal.trim().to_string(),
        at: values,
        expected,
    })
}

#[derive(Default)]
struct RecordBuilder {
    start: usize,
    fields: Vec<(usize, String, String)>,
}

impl RecordBuilder {
    fn build(self) -> Result<Scenario, ManifestError> {
        let err = |line: usize, msg: String| ManifestError { line, msg };
        let get = |key: &str| self.fields.iter().find(|(_, k, _)| k == key).map(|(l, _, v)| (*l, v.clone()));
        let (_, name) = get("name").ok_or_else(|| err(self.start, "record has no `name`".into()))?;
        let (vars_line, vars) = get("vars").ok_or_else(|| err(self.start, format!("{name}: missing `vars`")))?;
        let ring = Ring::new(vars.split(',').map(str::trim)).map_err(|e| err(vars_line, e.to_string()))?;
        let parameter_name = get("parameter").map(|(_, v)| v).unwrap_or_else(|| "t".to_string());
        let parameter = ring.index_of(parameter_name.trim());

        let mut base = HashMap::new();
        let mut variant_texts = Vec::new();
        let mut checks = Vec::new();
        let mut family = None;
        let mut restrict = None;
        let mut has_limit = false;
        let mut plane: Option<(usize, String)> = None;
        let mut plane_expect: Option<String> = None;
        for (line, key, value) in &self.fields {
            let line = *line;
            match key.as_str() {
                "name" | "vars" | "title" | "anchor" | "parameter" => {}
                "let" => {
                    let (k, v) = parse_binding(&ring, value, &base).map_err(|m| err(line, m))?;
                    base.insert(k, v);
                }
                "variant" => variant_texts.push((line, value.clone())),
                "identity" => {
                    let (lhs, rhs) = value
                        .split_once("==")
                        .ok_or_else(|| err(line, "identity needs `==`".into()))?;
                    checks.push((line, Check::Identity {
                        lhs: lhs.trim().into(),
                        rhs: rhs.trim().into(),
                    }));
                }
                "family" => family = Some(value.clone()),
                "restrict" => restrict = Some(value.clone()),
                "reduction" => checks.push((line, Check::Reduction(value.clone()))),
                "restricted" => checks.push((line, Check::Restricted(value.clone()))),
                "limit" => {
                    has_limit = true;
                    checks.push((line, Check::Limit(value.clone())));
                }
                "plane" => plane = Some((line, value.clone())),
                "plane_expect" => plane_expect = Some(value.clone()),
                "member" => checks.push((line, parse_member(value, true).map_err(|m| err(line, m))?)),
                "not_member" => checks.push((line, parse_member(value, false).map_err(|m| err(line, m))?)),
                other => return Err(err(line, format!("unknown key `{other}`"))),
            }
        }
        match (plane, plane_expect) {
            (Some((line, p)), Some(e)) => {
                if !has_limit {
                    return Err(err(line, "`plane` needs a `limit` to restrict".into()));
                }
                checks.push((line, Check::Plane { plane: p, expect: e }));
            }
            (None, None) => {}
            _ => return Err(err(self.start, format!("{name}: `plane` and `plane_expect` go together"))),
        }
        let needs_family = checks
            .iter()
            .any(|(_, c)| matches!(c, Check::Reduction(_) | Check::Restricted(_) | Check::Limit(_)));
        if needs_family && (family.is_none() || parameter.is_none()) {
            return Err(err(
                self.start,
                format!("{name}: limit checks need a `family` and the parameter `{parameter_name}` among the variables"),
            ));
        }

        let mut variants = vec![Variant {
            label: None,
            bindings: base.clone(),
        }];
        for (line, text) in variant_texts {
            let mut bindings = base.clone();
            for part in text.split(';') {
                let (k, v) = parse_binding(&ring, part, &bindings).map_err(|m| err(line, m))?;
                bindings.insert(k, v);
            }
            variants.push(Variant {
                label: Some(text.trim().to_string()),
                bindings,
            });
        }

        let scenario = Scenario {
            title: get("title").map(|(_, v)| v).unwrap_or_default(),
            anchor: get("anchor").map(|(_, v)| v).unwrap_or_default(),
            name,
            ring,
            parameter,
            variants,
            family,
            restrict,
            checks: checks.iter().map(|(_, c)| c.clone()).collect(),
        };
        scenario.validate(&checks)?;
        Ok(scenario)
    }
}

impl Scenario {
    fn validate(&self, checks: &[(usize, Check)]) -> Result<(), ManifestError> {
        for v in &self.variants {
            let parse = |line: usize, text: &str, b: &HashMap<String, Polynomial>| {
                parse_ideal_expr(&self.ring, text, b).map_err(|msg| ManifestError { line, msg })
            };
            let b = &v.bindings;
            if let Some(f) = &self.family {
                parse(0, f, b)?;
            }
            if let Some(r) = &self.restrict {
                parse(0, r, b)?;
            }
            for (line, check) in checks {
                match check {
                    Check::Identity { lhs, rhs } => {
                        parse(*line, lhs, b)?;
                        parse(*line, rhs, b)?;
                    }
                    Check::Reduction(e) | Check::Restricted(e) => {
                        parse(*line, e, b)?;
                    }
                    Check::Limit(e) => {
                        let ideal = parse(*line, e, b)?;
                        let t = self.parameter.expect("checked");
                        if ideal.generators().iter().any(|g| g.involves(t)) {
                            return Err(ManifestError {
                                line: *line,
                                msg: "expected limit must not involve the family parameter".into(),
                            });
                        }
                    }
                    Check::Plane { plane, expect } => {
                        parse_polynomial_with(&self.ring, plane, b).map_err(|e| ManifestError {
                            line: *line,
                            msg: e.to_string(),
                        })?;
                        parse(*line, expect, b)?;
                    }
                    Check::Member { poly, ideal, at, .. } => {
                        let b = with_values(b, at, &self.ring);
                        parse_polynomial_with(&self.ring, poly, &b).map_err(|e| ManifestError {
                            line: *line,
                            msg: e.to_string(),
                        })?;
                        parse(*line, ideal, &b)?;
                    }
                }
            }
        }
        Ok(())
    }

    fn ideal(&self, text: &str, bindings: &HashMap<String, Polynomial>) -> Ideal {
        parse_ideal_expr(&self.ring, text, bindings).expect("validated when the manifest was read")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Family, restriction and expected limit for every variant.
    pub fn instances(&self) -> Vec<ScenarioInstance> {
        self.variants
            .iter()
            .map(|v| ScenarioInstance {
                label: v.label.clone(),
                parameter: self.parameter,
                family: self.family.as_ref().map(|f| self.ideal(f, &v.bindings)),
                restriction: self.restrict.as_ref().map(|r| self.ideal(r, &v.bindings)),
                expected_limit: self.checks.iter().find_map(|c| match c {
                    Check::Limit(e) => Some(self.ideal(e, &v.bindings)),
                    _ => None,
                }),
            })
            .collect()
    }

    /// Replaces the expected limit (used for negative controls).
    pub fn with_expected_limit(mut self, text: &str) -> Self {
        for c in &mut self.checks {
            if let Check::Limit(e) = c {
                *e = text.to_string();
            }
        }
        self
    }

    pub fn run(&self) -> VerificationReport {
        let mut steps = Vec::new();
        for v in &self.variants {
            let prefix = v.label.as_ref().map(|l| format!("[{l}] ")).unwrap_or_default();
            let b = &v.bindings;
            let family = self.family.as_ref().map(|f| self.ideal(f, b));
            let restriction = self.restrict.as_ref().map(|r| self.ideal(r, b));
            let restricted_family = family.as_ref().map(|f| match &restriction {
                Some(r) => f.sum(r),
                None => f.clone(),
            });
            let t_sq = self.parameter.map(|t| {
                let tv = Polynomial::var(&self.ring, t);
                &tv * &tv
            });
            let mut limit: Option<Ideal> = None;
            let compare = |description: String, computed: &Ideal, expected: &Ideal| VerificationStep {
                description: format!("{prefix}{description}"),
                computed: canonical(computed),
                expected: canonical(expected),
                pass: computed.equals(expected),
            };
            for check in &self.checks {
                match check {
                    Check::Identity { lhs, rhs } => {
                        steps.push(compare(format!("{lhs} == {rhs}"), &self.ideal(lhs, b), &self.ideal(rhs, b)));
                    }
                    Check::Reduction(e) => {
                        let t = self.parameter.expect("validated");
                        let at_zero = family.as_ref().expect("validated").substitute(t, &Rational::zero());
                        steps.push(compare(format!("family at t = 0 is {e}"), &at_zero, &self.ideal(e, b)));
                    }
                    Check::Restricted(e) => {
                        let t2 = t_sq.clone().expect("validated");
                        let got = restricted_family.as_ref().expect("validated").add_generators(std::slice::from_ref(&t2));
                        let want = self.ideal(e, b).add_generators(&[t2]);
                        steps.push(compare(format!("restricted family is {e} modulo t^2"), &got, &want));
                    }
                    Check::Limit(e) => {
                        let t = self.parameter.expect("validated");
                        let got = limit_ideal(restricted_family.as_ref().expect("validated"), t);
                        steps.push(compare(format!("limit = {e}"), &got, &self.ideal(e, b)));
                        limit = Some(got);
                    }
                    Check::Plane { plane, expect } => {
                        let p = parse_polynomial_with(&self.ring, plane, b).expect("validated");
                        let got = restrict_to_plane(limit.as_ref().expect("limit precedes plane"), &p);
                        steps.push(compare(format!("limit + ({plane}) = {expect}"), &got, &self.ideal(expect, b)));
                    }
                    Check::Member {
                        poly,
                        ideal,
                        at,
                        expected,
                    } => {
                        let vb = with_values(b, at, &self.ring);
                        let p = parse_polynomial_with(&self.ring, poly, &vb).expect("validated");
                        let i = self.ideal(ideal, &vb);
                        let remainder = i.normal_form(&p);
                        let is_member = remainder.is_zero();
                        let at_text: Vec<String> = at.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                        let relation = if *expected { "in" } else { "not in" };
                        steps.push(VerificationStep {
                            description: format!("{prefix}{poly} {relation} {ideal} at {}", at_text.join(", ")),
                            computed: format!("normal form {remainder}"),
                            expected: if *expected { "normal form 0" } else { "nonzero normal form" }.to_string(),
                            pass: is_member == *expected,
                        });
                    }
                }
            }
        }
        VerificationReport {
            name: self.name.clone(),
            title: self.title.clone(),
            anchor: self.anchor.clone(),
            pass: steps.iter().all(|s| s.pass),
            steps,
        }
    }
}

fn with_values(b: &HashMap<String, Polynomial>, at: &[(String, Rational)], ring: &Ring) -> HashMap<String, Polynomial> {
    let mut out = b.clone();
    for (k, v) in at {
        out.insert(k.clone(), Polynomial::constant(ring, v.clone()));
    }
    out
}

/// Reads a manifest: a `version:` line, then blank-line separated records.
pub fn parse_manifest(text: &str) -> Result<Vec<Scenario>, ManifestError> {
    let mut version_seen = false;
    let mut records = Vec::new();
    let mut current: Option<RecordBuilder> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.starts_with('#') {
            continue;
        }
        if line.is_empty() {
            if let Some(r) = current.take() {
                records.push(r);
            }
            continue;
        }
        let (key, value) = line.split_once(':').ok_or_else(|| ManifestError {
            line: line_no,
            msg: format!("expected `key: value`, got `{line}`"),
        })?;
        let (key, value) = (key.trim(), value.trim());
        if !version_seen {
            if key != "version" {
                return Err(ManifestError {
                    line: line_no,
                    msg: "manifest must start with `version:`".into(),
                });
            }
            if value != MANIFEST_VERSION.to_string() {
                return Err(ManifestError {
                    line: line_no,
                    msg: format!("unsupported manifest version {value}"),
                });
            }
            version_seen = true;
            continue;
        }
        current
            .get_or_insert_with(|| RecordBuilder {
                start: line_no,
                ..Default::default()
            })
            .fields
            .push((line_no, key.to_string(), value.to_string()));
    }
    if let Some(r) = current.take() {
        records.push(r);
    }
    if !version_seen {
        return Err(ManifestError {
            line: 0,
            msg: "empty manifest".into(),
        });
    }
    let scenarios = records.into_iter().map(RecordBuilder::build).collect::<Result<Vec<_>, _>>()?;
    let mut names: Vec<&str> = scenarios.iter().map(|s| s.name.as_str()).collect();
    names.sort_unstable();
    if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
        return Err(ManifestError {
            line: 0,
            msg: format!("duplicate scenario `{}`", w[0]),
        });
    }
    Ok(scenarios)
}

pub fn builtin_scenarios() -> Vec<Scenario> {
    parse_manifest(BUILTIN_MANIFEST).expect("built-in manifest is valid")
}

pub fn run_manifest(text: &str) -> Result<Vec<VerificationReport>, ManifestError> {
    Ok(parse_manifest(text)?.iter().map(Scenario::run).collect())
}

/// Runs the built-in scenarios S1–S8.
pub fn run_paper_suite() -> Vec<VerificationReport> {
    builtin_scenarios().iter().map(Scenario::run).collect()
}
