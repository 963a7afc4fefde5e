//! The tabulated minimal monodromies: 20 cases for abelian `G` and 11 for the
//! sporadic group of order 16, with the values they are expected to produce.

use crate::elliptic::{EllipticGroup, GElement, GroupPreset};
use crate::fpgroup::FiniteGroup;
use crate::invariants::Certainty;
use crate::monodromy::{CaseLabel, EllipticBranchDatum, MonodromyDatum};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expected {
    /// `|K|`, the number of central elements acting trivially on `H_1(S, Z)`.
    pub trivial_action_order: usize,
    /// Torsion of `H_1(S, Z)`, where known.
    pub torsion: Option<Vec<u64>>,
    pub aut_z_order: usize,
    pub certainty: Certainty,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    /// 1 for abelian groups, 2 for the sporadic group.
    pub list: u8,
    pub group: GroupPreset,
    pub name: &'static str,
    /// Images in the usual notation, e.g. `(e, 0; t, 2t)`.
    pub notation: &'static str,
    pub label: CaseLabel,
    pub datum: MonodromyDatum,
    pub mon_e: EllipticBranchDatum,
    pub expected: Expected,
}

/// Parses `0`, `t`, `2t`, `s`, `t+s`, optionally followed by `e`, `e^2`, ...
/// Panics on malformed names; see [`try_named_element`].
pub fn named_element(g: &EllipticGroup, preset: GroupPreset, s: &str) -> GElement {
    try_named_element(g, preset, s).unwrap_or_else(|e| panic!("{e}"))
}

pub fn try_named_element(g: &EllipticGroup, preset: GroupPreset, s: &str) -> Result<GElement, String> {
    let bad = || format!("cannot parse element `{s}` for {preset}");
    let s = s.trim();
    if s == "1" {
        return Ok(g.identity());
    }
    let s = s.replace(['(', ')'], "");
    let s = s.as_str();
    let (tpart, k) = match s.find('e') {
        Some(i) => {
            let k = match &s[i + 1..] {
                "" => 1,
                rest => rest
                    .strip_prefix('^')
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(bad)?,
            };
            (&s[..i], k)
        }
        None => (s, 0),
    };
    let names = preset.named_translations();
    let mut t = [0i64, 0];
    for term in tpart.split('+').map(str::trim).filter(|x| !x.is_empty() && *x != "0") {
        let split = term.find(|c: char| c.is_ascii_alphabetic()).ok_or_else(bad)?;
        let coeff: i64 = if split == 0 { 1 } else { term[..split].parse().map_err(|_| bad())? };
        let (_, v) = names.iter().find(|(n, _)| *n == &term[split..]).ok_or_else(bad)?;
        t[0] += coeff * v[0];
        t[1] += coeff * v[1];
    }
    Ok(g.element(t, k))
}

/// Inverse of [`named_element`]: `2t`, `t+s`, `(t+s)e^2`, `0`.
pub fn element_name(g: &EllipticGroup, preset: GroupPreset, x: &GElement) -> String {
    let names = preset.named_translations();
    let n = g.spec().translation_order() as i64;
    let mut tpart = None;
    'search: for b in 0..if names.len() > 1 { n } else { 1 } {
        for a in 0..n {
            let mut t = [a * names[0].1[0], a * names[0].1[1]];
            if let Some((_, v)) = names.get(1) {
                t = [t[0] + b * v[0], t[1] + b * v[1]];
            }
            if g.translation(t).t == x.t {
                let term = |c: i64, name: &str| match c {
                    0 => None,
                    1 => Some(name.to_string()),
                    c => Some(format!("{c}{name}")),
                };
                let terms: Vec<String> = [term(a, names[0].0), names.get(1).and_then(|(nm, _)| term(b, nm))]
                    .into_iter()
                    .flatten()
                    .collect();
                tpart = Some(terms);
                break 'search;
            }
        }
    }
    let terms = tpart.unwrap_or_else(|| vec![format!("({},{})", x.t[0], x.t[1])]);
    let rot = match x.k {
        0 => String::new(),
        1 => "e".to_string(),
        k => format!("e^{k}"),
    };
    match (terms.len(), rot.is_empty()) {
        (0, true) => "0".to_string(),
        (0, false) => rot,
        (1, _) => format!("{}{rot}", terms[0]),
        (_, true) => terms.join("+"),
        (_, false) => format!("({}){rot}", terms.join("+")),
    }
}

/// Branch data of `E → E/G = P^1` used with each preset.
pub fn mon_e_preset(preset: GroupPreset) -> EllipticBranchDatum {
    let names: &[&str] = match preset {
        GroupPreset::Z3xMu3 => &["e", "te", "2te"],
        GroupPreset::Z2xMu4 => &["e", "te", "te^2"],
        GroupPreset::Z22xMu2 => &["e", "te", "se", "t+se"],
        GroupPreset::Z2xMu2 => &["e", "e", "te", "te"],
        GroupPreset::Sporadic16 => &["te^2", "te", "e"],
    };
    let g = preset.group();
    let els = names.iter().map(|n| named_element(&g, preset, n)).collect();
    EllipticBranchDatum::new(&g, els)
}

struct Row {
    group: GroupPreset,
    name: &'static str,
    h: usize,
    images: &'static [&'static str],
    k: usize,
    notation: &'static str,
    label: CaseLabel,
    count: usize,
    torsion: Option<&'static [u64]>,
    aut: usize,
    certainty: Certainty,
}

fn build(list: u8, rows: &[Row]) -> Vec<CatalogEntry> {
    rows.iter()
        .map(|row| {
            let g = row.group.group();
            let els: Vec<GElement> = row.images.iter().map(|n| named_element(&g, row.group, n)).collect();
            let split = els.len() - row.k;
            let datum = MonodromyDatum::new(&g, row.h, els[..split].to_vec(), els[split..].to_vec());
            CatalogEntry {
                list,
                group: row.group,
                name: row.name,
                notation: row.notation,
                label: row.label,
                datum,
                mon_e: mon_e_preset(row.group),
                expected: Expected {
                    trivial_action_order: row.count,
                    torsion: row.torsion.map(|t| t.to_vec()),
                    aut_z_order: row.aut,
                    certainty: row.certainty,
                },
            }
        })
        .collect()
}

use Certainty::{Exact, UpperBound};
use GroupPreset::{Sporadic16, Z22xMu2, Z2xMu2, Z2xMu4, Z3xMu3};

const NONE: Option<&[u64]> = Some(&[]);

#[rustfmt::skip]
const LIST1: &[Row] = &[
    Row { group: Z3xMu3, name: "I-1", h: 1, images: &["e", "0", "t", "2t"], k: 2, notation: "(e, 0; t, 2t)", label: CaseLabel::I1, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z3xMu3, name: "I-2", h: 2, images: &["e", "t", "0", "0"], k: 0, notation: "(e, t, 0, 0)", label: CaseLabel::I2, count: 9, torsion: NONE, aut: 3, certainty: Exact },
    Row { group: Z3xMu3, name: "II-2", h: 2, images: &["e", "0", "t", "0"], k: 0, notation: "(e, 0, t, 0)", label: CaseLabel::II2, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z3xMu3, name: "II-3 v1", h: 2, images: &["e", "t", "t", "0"], k: 0, notation: "(e, t, t, 0)", label: CaseLabel::II3, count: 9, torsion: NONE, aut: 3, certainty: Exact },
    Row { group: Z3xMu3, name: "II-3 v2", h: 2, images: &["e", "t", "2t", "0"], k: 0, notation: "(e, t, 2t, 0)", label: CaseLabel::II3, count: 9, torsion: NONE, aut: 3, certainty: Exact },
    Row { group: Z2xMu4, name: "I-1", h: 1, images: &["e", "0", "t", "t"], k: 2, notation: "(e, 0; t, t)", label: CaseLabel::I1, count: 2, torsion: Some(&[2, 2]), aut: 2, certainty: Exact },
    Row { group: Z2xMu4, name: "I-2", h: 2, images: &["e", "t", "0", "0"], k: 0, notation: "(e, t, 0, 0)", label: CaseLabel::I2, count: 8, torsion: NONE, aut: 2, certainty: Exact },
    Row { group: Z2xMu4, name: "II-2", h: 2, images: &["e", "0", "t", "0"], k: 0, notation: "(e, 0, t, 0)", label: CaseLabel::II2, count: 2, torsion: Some(&[2]), aut: 1, certainty: Exact },
    Row { group: Z2xMu4, name: "II-3", h: 2, images: &["e", "t", "t", "0"], k: 0, notation: "(e, t, t, 0)", label: CaseLabel::II3, count: 8, torsion: NONE, aut: 2, certainty: Exact },
    Row { group: Z22xMu2, name: "I-1", h: 1, images: &["e", "0", "t", "s", "t+s"], k: 3, notation: "(e, 0; t, s, t+s)", label: CaseLabel::I1, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z22xMu2, name: "I-3", h: 1, images: &["e", "t", "s", "s"], k: 2, notation: "(e, t; s, s)", label: CaseLabel::I3, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z22xMu2, name: "II v1", h: 2, images: &["e", "t", "s", "0"], k: 0, notation: "(e, t, s, 0)", label: CaseLabel::II, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z22xMu2, name: "II v2", h: 2, images: &["e", "t", "s", "t"], k: 0, notation: "(e, t, s, t)", label: CaseLabel::II, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z22xMu2, name: "II-1", h: 2, images: &["e", "0", "t", "s"], k: 0, notation: "(e, 0, t, s)", label: CaseLabel::II1, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z22xMu2, name: "III v1", h: 2, images: &["e", "t", "t", "0", "s", "s"], k: 2, notation: "(e, t, t, 0; s, s)", label: CaseLabel::III, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z22xMu2, name: "III v2", h: 2, images: &["e", "0", "t", "0", "s", "s"], k: 2, notation: "(e, 0, t, 0; s, s)", label: CaseLabel::III, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z2xMu2, name: "I-1", h: 1, images: &["e", "0", "t", "t"], k: 2, notation: "(e, 0; t, t)", label: CaseLabel::I1, count: 1, torsion: Some(&[2, 4]), aut: 1, certainty: Exact },
    Row { group: Z2xMu2, name: "I-2", h: 2, images: &["e", "t", "0", "0"], k: 0, notation: "(e, t, 0, 0)", label: CaseLabel::I2, count: 4, torsion: Some(&[2]), aut: 2, certainty: UpperBound },
    Row { group: Z2xMu2, name: "II-2", h: 2, images: &["e", "0", "t", "0"], k: 0, notation: "(e, 0, t, 0)", label: CaseLabel::II2, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Z2xMu2, name: "II-3", h: 2, images: &["e", "t", "t", "0"], k: 0, notation: "(e, t, t, 0)", label: CaseLabel::II3, count: 4, torsion: Some(&[2]), aut: 2, certainty: UpperBound },
];

#[rustfmt::skip]
const LIST2: &[Row] = &[
    Row { group: Sporadic16, name: "IV-2", h: 1, images: &["e", "0", "s", "s"], k: 2, notation: "(e, 0; s, s)", label: CaseLabel::IV(2), count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "V-1", h: 1, images: &["e", "t", "t+s"], k: 1, notation: "(e, t; t+s)", label: CaseLabel::V(1), count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "V*-2", h: 2, images: &["e", "0", "0", "t", "s", "s"], k: 2, notation: "(e, 0, 0, t; s, s)", label: CaseLabel::VStar(2), count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "V**-2", h: 2, images: &["e", "0", "0", "t", "t+s", "t+s"], k: 2, notation: "(e, 0, 0, t; t+s, t+s)", label: CaseLabel::VStar2(2), count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "V***-1", h: 2, images: &["e", "t", "0", "t", "t+s"], k: 1, notation: "(e, t, 0, t; t+s)", label: CaseLabel::VStar3(1), count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "VI", h: 2, images: &["e", "0", "t", "s"], k: 0, notation: "(e, 0, t, s)", label: CaseLabel::VI, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "VI*", h: 2, images: &["e", "t+s", "t", "0"], k: 0, notation: "(e, t+s, t, 0)", label: CaseLabel::VIStar, count: 2, torsion: NONE, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "VI**", h: 2, images: &["e", "t+s", "t", "s"], k: 0, notation: "(e, t+s, t, s)", label: CaseLabel::VIStar2, count: 2, torsion: NONE, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "VIII", h: 2, images: &["e", "0", "t", "0"], k: 0, notation: "(e, 0, t, 0)", label: CaseLabel::VIII, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "VII", h: 3, images: &["e", "0", "t+s", "0", "s", "0"], k: 0, notation: "(e, 0, t+s, 0, s, 0)", label: CaseLabel::VII, count: 1, torsion: None, aut: 1, certainty: Exact },
    Row { group: Sporadic16, name: "VII*", h: 3, images: &["e", "0", "t", "0", "s", "0"], k: 0, notation: "(e, 0, t, 0, s, 0)", label: CaseLabel::VIIStar, count: 1, torsion: None, aut: 1, certainty: Exact },
];

pub fn catalog_list1() -> Vec<CatalogEntry> {
    build(1, LIST1)
}

pub fn catalog_list2() -> Vec<CatalogEntry> {
    build(2, LIST2)
}

pub fn catalog_all() -> Vec<CatalogEntry> {
    let mut v = catalog_list1();
    v.extend(catalog_list2());
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monodromy::{classify, is_minimal};

    #[test]
    fn sizes() {
        assert_eq!(catalog_list1().len(), 20);
        assert_eq!(catalog_list2().len(), 11);
    }

    #[test]
    fn entries_validate_and_classify() {
        for e in catalog_all() {
            assert_eq!(e.datum.validate(), Ok(()), "{} {}", e.group, e.name);
            assert!(e.datum.genus_c().unwrap() >= 2);
            assert_eq!(e.mon_e.validate(), Ok(()), "{} monE", e.group);
            let label = classify(&e.datum);
            assert_eq!(label, e.label, "{} {}", e.group, e.name);
            assert!(is_minimal(&e.datum, label), "{} {}", e.group, e.name);
        }
    }

    #[test]
    fn named_elements() {
        let p = GroupPreset::Sporadic16;
        let g = p.group();
        assert_eq!(named_element(&g, p, "t+s"), g.translation([1, 1]));
        assert_eq!(named_element(&g, p, "te^2"), g.element([1, 0], 2));
        assert_eq!(named_element(&g, p, "e"), g.epsilon());
        assert_eq!(named_element(&g, p, "0"), g.identity());
        let p = GroupPreset::Z3xMu3;
        let g = p.group();
        assert_eq!(named_element(&g, p, "2t"), g.translation([2, 0]));
    }

    #[test]
    fn names_round_trip() {
        for p in GroupPreset::ALL {
            let g = p.group();
            for x in g.elements() {
                let name = element_name(&g, p, &x);
                assert_eq!(named_element(&g, p, &name), x, "{p} {name}");
            }
        }
        let p = GroupPreset::Sporadic16;
        let g = p.group();
        assert_eq!(element_name(&g, p, &g.element([1, 1], 2)), "(t+s)e^2");
        assert_eq!(element_name(&g, p, &g.identity()), "0");
    }
}
