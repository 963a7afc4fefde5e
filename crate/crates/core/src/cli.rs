//! Case files, reports and the logic behind the `autz` subcommands.
//!
//! Every command returns an [`Outcome`]; the binary only prints it and exits.
//! Exit codes: 0 success, 1 invalid input or a mismatch with `expected`,
//! 2 I/O or internal failure.

use std::fmt::Write as _;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, element_name, try_named_element, CatalogEntry};
use crate::elliptic::{make_group, EllipticGroup, EllipticGroupSpec, GElement, GroupPreset, Vec2};
use crate::invariants::{self, AutZReport, Certainty, DecisionRule};
use crate::monodromy::{self, classify, is_minimal, EllipticBranchDatum, MonodromyDatum};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Human,
    Machine,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, stderr: String::new(), code: 0 }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Self { stdout: String::new(), stderr, code }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupInput {
    Preset(String),
    Explicit { r: u32, lattice: [Vec2; 2] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementInput {
    Named(String),
    Explicit { t: Vec2, k: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum MonEInput {
    /// Only `"preset"` is accepted.
    Preset(String),
    List(Vec<ElementInput>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpectedInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trivial_action_order: Option<usize>,
    /// Full `H_1(S, Z)`, written as in the report, e.g. `Z^4 + Z/2`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1_s: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h1_torsion: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub aut_z_order: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certainty: Option<Certainty>,
}

/// A case as read from JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaseFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub group: GroupInput,
    pub h: usize,
    pub ab_images: Vec<ElementInput>,
    #[serde(default)]
    pub gamma_images: Vec<ElementInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_orders: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mon_e: Option<MonEInput>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<ExpectedInput>,
}

/// A case file resolved against its group.
#[derive(Clone, Debug)]
pub struct Case {
    pub name: Option<String>,
    pub preset: Option<GroupPreset>,
    pub datum: MonodromyDatum,
    pub mon_e: Option<EllipticBranchDatum>,
    pub expected: Option<ExpectedInput>,
}

impl Case {
    pub fn group(&self) -> &EllipticGroup {
        self.datum.group()
    }

    pub fn name_of(&self, x: &GElement) -> String {
        match self.preset {
            Some(p) => element_name(self.group(), p, x),
            None => x.to_string(),
        }
    }

    /// The datum in the usual `(α, β, ...; γ, ...)` notation.
    pub fn notation(&self) -> String {
        let join = |v: &[GElement]| v.iter().map(|x| self.name_of(x)).collect::<Vec<_>>().join(", ");
        datum_notation(&join(self.datum.ab_images()), &join(self.datum.gamma_images()))
    }
}

fn datum_notation(ab: &str, gammas: &str) -> String {
    if gammas.is_empty() {
        format!("({ab})")
    } else if ab.is_empty() {
        format!("({gammas})")
    } else {
        format!("({ab}; {gammas})")
    }
}

impl CaseFile {
    pub fn from_json(s: &str) -> Result<Self, String> {
        serde_json::from_str(s).map_err(|e| format!("malformed case file: {e}"))
    }

    pub fn resolve(&self) -> Result<Case, String> {
        let (preset, group) = match &self.group {
            GroupInput::Preset(name) => {
                let p: GroupPreset = name.parse().map_err(|e| format!("{e}"))?;
                (Some(p), p.group())
            }
            GroupInput::Explicit { r, lattice } => {
                let spec = EllipticGroupSpec::new(*r, *lattice).map_err(|e| format!("invalid group: {e}"))?;
                (None, make_group(&spec))
            }
        };
        let element = |x: &ElementInput| -> Result<GElement, String> {
            match (x, preset) {
                (ElementInput::Explicit { t, k }, _) => Ok(group.element(*t, *k)),
                (ElementInput::Named(s), Some(p)) => try_named_element(&group, p, s),
                (ElementInput::Named(s), None) => {
                    Err(format!("named element `{s}` needs a preset group; use {{\"t\": [a, b], \"k\": n}}"))
                }
            }
        };
        let ab = self.ab_images.iter().map(element).collect::<Result<Vec<_>, _>>()?;
        let gammas = self.gamma_images.iter().map(element).collect::<Result<Vec<_>, _>>()?;
        let datum = match &self.gamma_orders {
            Some(o) => MonodromyDatum::with_orders(&group, self.h, ab, gammas, o.clone()),
            None => MonodromyDatum::new(&group, self.h, ab, gammas),
        };
        datum.validate().map_err(|e| format!("invalid monodromy: {e}"))?;
        let mon_e = match (&self.mon_e, preset) {
            (None, Some(p)) => Some(catalog::mon_e_preset(p)),
            (Some(MonEInput::Preset(s)), Some(p)) if s == "preset" => Some(catalog::mon_e_preset(p)),
            (Some(MonEInput::Preset(s)), _) => {
                return Err(format!("mon_e `{s}`: expected \"preset\" with a preset group, or a list of elements"))
            }
            (Some(MonEInput::List(v)), _) => {
                let els = v.iter().map(element).collect::<Result<Vec<_>, _>>()?;
                Some(EllipticBranchDatum::new(&group, els))
            }
            (None, None) => None,
        };
        if let Some(e) = &mon_e {
            e.validate().map_err(|e| format!("invalid mon_e: {e}"))?;
        }
        Ok(Case {
            name: self.name.clone(),
            preset,
            datum,
            mon_e,
            expected: self.expected.clone(),
        })
    }
}

/// The case file of a catalog entry, with its expected values.
pub fn case_file_from_entry(entry: &CatalogEntry) -> CaseFile {
    let g = entry.datum.group();
    let named = |v: &[GElement]| v.iter().map(|x| ElementInput::Named(element_name(g, entry.group, x))).collect();
    CaseFile {
        name: Some(format!("{} {}", entry.group, entry.name)),
        group: GroupInput::Preset(entry.group.name().to_string()),
        h: entry.datum.h(),
        ab_images: named(entry.datum.ab_images()),
        gamma_images: named(entry.datum.gamma_images()),
        gamma_orders: None,
        mon_e: Some(MonEInput::Preset("preset".into())),
        expected: Some(ExpectedInput {
            label: Some(entry.label.to_string()),
            trivial_action_order: Some(entry.expected.trivial_action_order),
            h1_s: None,
            h1_torsion: entry.expected.torsion.clone(),
            aut_z_order: Some(entry.expected.aut_z_order),
            certainty: Some(entry.expected.certainty),
        }),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AutZSection {
    pub order: usize,
    pub certainty: Certainty,
    pub candidates: Vec<String>,
    pub rules: Vec<DecisionRule>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub field: String,
    pub expected: String,
    pub actual: String,
    pub ok: bool,
}

/// Everything computed for one case. Field order is the output order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub name: Option<String>,
    pub group: String,
    pub datum: String,
    pub genus_c: i64,
    pub label: String,
    pub minimal: bool,
    pub trivial_action_order: usize,
    pub trivial_action: Vec<String>,
    pub h1_s: Option<String>,
    pub h1_torsion: Option<Vec<u64>>,
    pub aut_z: Option<AutZSection>,
    pub checks: Vec<Check>,
    pub pass: bool,
}

pub fn analyze_case(case: &Case) -> Result<Report, String> {
    let d = &case.datum;
    let label = classify(d);
    let k = invariants::trivial_action_subgroup(d).map_err(|e| e.to_string())?;
    let names = |v: &[GElement]| v.iter().map(|x| case.name_of(x)).collect::<Vec<_>>();
    let aut: Option<AutZReport> = match &case.mon_e {
        Some(e) => {
            let h1 = invariants::h1_s(d, e).map_err(|e| e.to_string())?;
            Some(invariants::decide(d, k.subgroup.clone(), h1))
        }
        None => None,
    };
    let group = match case.preset {
        Some(p) => p.name().to_string(),
        None => {
            let s = case.group().spec();
            format!("r={} lattice={:?}", s.r(), s.hnf_columns())
        }
    };
    let mut report = Report {
        name: case.name.clone(),
        group,
        datum: case.notation(),
        genus_c: d.genus_c().map_err(|e| e.to_string())?,
        label: label.to_string(),
        minimal: is_minimal(d, label),
        trivial_action_order: k.order(),
        trivial_action: names(&k.subgroup),
        h1_s: aut.as_ref().map(|a| a.h1_s.to_string()),
        h1_torsion: aut.as_ref().map(|a| a.h1_s.torsion_u64()),
        aut_z: aut.as_ref().map(|a| AutZSection {
            order: a.aut_z_order(),
            certainty: a.certainty,
            candidates: names(&a.candidates),
            rules: a.rules.clone(),
        }),
        checks: Vec::new(),
        pass: true,
    };
    if let Some(exp) = &case.expected {
        report.checks = checks(exp, &report);
        report.pass = report.checks.iter().all(|c| c.ok);
    }
    Ok(report)
}

fn checks(exp: &ExpectedInput, r: &Report) -> Vec<Check> {
    let mut out = Vec::new();
    let mut push = |field: &str, expected: String, actual: String| {
        let ok = expected == actual;
        out.push(Check { field: field.into(), expected, actual, ok });
    };
    let or_none = |x: Option<String>| x.unwrap_or_else(|| "n/a".into());
    if let Some(l) = &exp.label {
        push("label", l.clone(), r.label.clone());
    }
    if let Some(n) = exp.trivial_action_order {
        push("trivial_action_order", n.to_string(), r.trivial_action_order.to_string());
    }
    if let Some(h) = &exp.h1_s {
        push("h1_s", h.clone(), or_none(r.h1_s.clone()));
    }
    if let Some(t) = &exp.h1_torsion {
        push("h1_torsion", format!("{t:?}"), or_none(r.h1_torsion.as_ref().map(|t| format!("{t:?}"))));
    }
    if let Some(n) = exp.aut_z_order {
        push("aut_z_order", n.to_string(), or_none(r.aut_z.as_ref().map(|a| a.order.to_string())));
    }
    if let Some(c) = exp.certainty {
        push("certainty", format!("{c:?}"), or_none(r.aut_z.as_ref().map(|a| format!("{:?}", a.certainty))));
    }
    out
}

pub fn render_report(r: &Report, format: Format) -> String {
    match format {
        Format::Machine => serde_json::to_string_pretty(r).expect("report serializes") + "\n",
        Format::Human => {
            let mut s = String::new();
            if let Some(n) = &r.name {
                let _ = writeln!(s, "case         {n}");
            }
            let _ = writeln!(s, "group        {}", r.group);
            let _ = writeln!(s, "monodromy    {}", r.datum);
            let _ = writeln!(s, "genus(C)     {}", r.genus_c);
            let _ = writeln!(s, "label        {}{}", r.label, if r.minimal { " (minimal)" } else { "" });
            let _ = writeln!(s, "K            {{{}}}  |K| = {}", r.trivial_action.join(", "), r.trivial_action_order);
            match (&r.h1_s, &r.aut_z) {
                (Some(h), Some(a)) => {
                    let _ = writeln!(s, "H1(S, Z)     {h}");
                    let _ = writeln!(
                        s,
                        "Aut_Z(S)     order {} ({:?}), candidates {{{}}}",
                        a.order,
                        a.certainty,
                        a.candidates.join(", ")
                    );
                    let _ = writeln!(s, "rules        {:?}", a.rules);
                }
                _ => {
                    let _ = writeln!(s, "H1(S, Z)     not computed (no mon_e)");
                }
            }
            for c in &r.checks {
                let mark = if c.ok { "ok  " } else { "FAIL" };
                let _ = writeln!(s, "{mark} {}: expected {}, got {}", c.field, c.expected, c.actual);
            }
            if !r.checks.is_empty() {
                let _ = writeln!(s, "{}", if r.pass { "PASS" } else { "MISMATCH" });
            }
            s
        }
    }
}

fn read_case(path: &Path) -> Result<Result<Case, String>, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(2, format!("error: cannot read {}: {e}\n", path.display())))?;
    Ok(CaseFile::from_json(&text).and_then(|f| f.resolve()))
}

pub fn cmd_analyze(path: &Path, format: Format) -> Outcome {
    let case = match read_case(path) {
        Err(o) => return o,
        Ok(Err(e)) => return Outcome::fail(1, format!("error: {e}\n")),
        Ok(Ok(c)) => c,
    };
    match analyze_case(&case) {
        Ok(r) => Outcome {
            stdout: render_report(&r, format),
            stderr: String::new(),
            code: if r.pass { 0 } else { 1 },
        },
        Err(e) => Outcome::fail(2, format!("internal error: {e}\n")),
    }
}

pub fn cmd_simplify(path: &Path) -> Outcome {
    let case = match read_case(path) {
        Err(o) => return o,
        Ok(Err(e)) => return Outcome::fail(1, format!("error: {e}\n")),
        Ok(Ok(c)) => c,
    };
    let simp = match monodromy::simplify(&case.datum) {
        Ok(s) => s,
        Err(e) => return Outcome::fail(1, format!("error: {e}\n")),
    };
    let show = |d: &MonodromyDatum| {
        let c = Case { datum: d.clone(), ..case.clone() };
        c.notation()
    };
    let mut s = String::new();
    let _ = writeln!(s, "start    {}  {}", show(&case.datum), classify(&case.datum));
    for (step, d, label) in &simp.steps {
        let _ = writeln!(s, "{step}");
        let _ = writeln!(s, "      -> {}  {label}", show(d));
    }
    let _ = writeln!(s, "minimal  {}  {}", show(&simp.minimal), simp.label);
    Outcome::ok(s)
}

pub fn cmd_catalog(list: Option<u8>) -> Outcome {
    let entries = match list {
        Some(1) => catalog::catalog_list1(),
        Some(2) => catalog::catalog_list2(),
        None => catalog::catalog_all(),
        Some(n) => return Outcome::fail(1, format!("error: no list {n}; use 1 or 2\n")),
    };
    let mut s = String::new();
    for e in &entries {
        let t = match &e.expected.torsion {
            Some(t) if t.is_empty() => "free".to_string(),
            Some(t) => format!("{t:?}"),
            None => "-".to_string(),
        };
        let _ = writeln!(
            s,
            "{}  {:<10} {:<8} {:<24} |K|={} torsion={} Aut_Z={} {:?}",
            e.list, e.group, e.name, e.notation, e.expected.trivial_action_order, t, e.expected.aut_z_order, e.expected.certainty
        );
    }
    Outcome::ok(s)
}

/// Number of worker threads from `AUTZ_THREADS`, if set.
pub fn thread_count() -> Option<usize> {
    std::env::var("AUTZ_THREADS").ok()?.parse().ok().filter(|n: &usize| *n > 0)
}

/// Recomputes a list of the catalog and compares with the tabulated values.
pub fn reproduce(list: u8) -> Result<Vec<Report>, String> {
    let entries = match list {
        1 => catalog::catalog_list1(),
        2 => catalog::catalog_list2(),
        n => return Err(format!("no list {n}; use a1 or a2")),
    };
    let run = || -> Result<Vec<Report>, String> {
        entries
            .par_iter()
            .map(|e| case_file_from_entry(e).resolve().and_then(|c| analyze_case(&c)))
            .collect()
    };
    match thread_count() {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| e.to_string())?
            .install(run),
        None => run(),
    }
}

pub fn cmd_reproduce(which: &str, format: Format) -> Outcome {
    let list = match which {
        "a1" => 1,
        "a2" => 2,
        other => return Outcome::fail(1, format!("error: unknown table `{other}`; use a1 or a2\n")),
    };
    let reports = match reproduce(list) {
        Ok(r) => r,
        Err(e) => return Outcome::fail(2, format!("internal error: {e}\n")),
    };
    let pass = reports.iter().all(|r| r.pass);
    let stdout = match format {
        Format::Machine => serde_json::to_string_pretty(&reports).expect("reports serialize") + "\n",
        Format::Human => {
            let mut s = String::new();
            for r in &reports {
                let a = r.aut_z.as_ref();
                let _ = writeln!(
                    s,
                    "{:<4} {:<28} {:<24} |K|={:<2} H1={:<22} Aut_Z={} {}",
                    if r.pass { "ok" } else { "FAIL" },
                    r.name.as_deref().unwrap_or(""),
                    r.datum,
                    r.trivial_action_order,
                    r.h1_s.as_deref().unwrap_or("-"),
                    a.map_or(0, |a| a.order),
                    a.map_or("-".to_string(), |a| format!("{:?}", a.certainty)),
                );
            }
            let n_ok = reports.iter().filter(|r| r.pass).count();
            let _ = writeln!(s, "{n_ok}/{} cases reproduced", reports.len());
            s
        }
    };
    Outcome { stdout, stderr: String::new(), code: if pass { 0 } else { 1 } }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MAIN_CASE: &str = r#"{
        "group": "Z3xMu3", "h": 2,
        "ab_images": ["e", "t", "0", "0"],
        "expected": {"h1_s": "Z^4", "aut_z_order": 3, "certainty": "Exact"}
    }"#;

    #[test]
    fn parses_and_analyzes() {
        let case = CaseFile::from_json(MAIN_CASE).unwrap().resolve().unwrap();
        assert_eq!(case.notation(), "(e, t, 0, 0)");
        let r = analyze_case(&case).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.label, "I-2");
        assert_eq!(r.trivial_action_order, 9);
        assert_eq!(r.aut_z.unwrap().candidates, ["0", "t", "2t"].map(String::from));
    }

    #[test]
    fn explicit_elements_and_group() {
        let json = r#"{
            "group": {"r": 3, "lattice": [[1, -1], [1, 2]]}, "h": 2,
            "ab_images": [{"t": [0, 0], "k": 1}, {"t": [1, 0], "k": 0}, {"t": [0, 0], "k": 0}, {"t": [0, 0], "k": 0}],
            "mon_e": [{"t": [0, 0], "k": 1}, {"t": [1, 0], "k": 1}, {"t": [2, 0], "k": 1}]
        }"#;
        let r = analyze_case(&CaseFile::from_json(json).unwrap().resolve().unwrap()).unwrap();
        assert_eq!(r.h1_s.as_deref(), Some("Z^4"));
        assert_eq!(r.aut_z.unwrap().order, 3);
    }

    #[test]
    fn rejects_bad_input() {
        let degenerate = r#"{"group": {"r": 2, "lattice": [[1, 2], [2, 4]]}, "h": 1, "ab_images": []}"#;
        let e = CaseFile::from_json(degenerate).unwrap().resolve().unwrap_err();
        assert!(e.contains("determinant 0"), "{e}");
        let bad_name = r#"{"group": "Z3xMu3", "h": 1, "ab_images": ["e", "q"], "gamma_images": ["t", "2t"]}"#;
        assert!(CaseFile::from_json(bad_name).unwrap().resolve().is_err());
        let bad_relator = r#"{"group": "Z3xMu3", "h": 1, "ab_images": ["e", "0"], "gamma_images": ["t", "t"]}"#;
        assert!(CaseFile::from_json(bad_relator).unwrap().resolve().is_err());
        assert!(CaseFile::from_json(r#"{"group": "Z3xMu3"}"#).is_err());
    }

    #[test]
    fn catalog_round_trip() {
        for e in catalog::catalog_all() {
            let f = case_file_from_entry(&e);
            let json = serde_json::to_string(&f).unwrap();
            let back = CaseFile::from_json(&json).unwrap();
            assert_eq!(back, f);
            let c = back.resolve().unwrap();
            assert_eq!(c.datum.images(), e.datum.images());
        }
    }
}
