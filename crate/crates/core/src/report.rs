//! Exhaustive self-check for one rank, used by `frieze verify`.

use std::collections::{BTreeSet, HashSet};

use crate::diamond::{minimal_cycle, Cycle, DiamondVector};
use crate::dyck::{all_paths, catalan, from_v_vector, t_map, unitary_shift, DyckPath, TMapInverse};
use crate::enumerate::{enumerate_all, f_row};
use crate::frieze::{from_cycle, from_quiddity};
use crate::scalar::Entry;
use crate::triangulation::{all_triangulations, full_map, quiddity, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &'static str, outcome: Result<String, String>) -> Self {
        match outcome {
            Ok(detail) => Check { name, pass: true, detail },
            Err(detail) => Check { name, pass: false, detail },
        }
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

pub(crate) fn is_rotation<X: PartialEq>(a: &[X], b: &[X]) -> bool {
    let n = a.len();
    n == b.len() && (0..n.max(1)).any(|k| (0..n).all(|i| a[(i + k) % n] == b[i]))
}

struct Data<T> {
    vectors: Vec<DiamondVector<T>>,
    cycles: Vec<Cycle<T>>,
    paths: Vec<DyckPath>,
    triangulations: Vec<Triangulation>,
}

/// Runs every check for rank `n`. A check that hits an error fails with the
/// error as its detail; later checks still run.
pub fn run_checks<T: Entry>(n: usize) -> Vec<Check> {
    let n3 = n + 3;
    let data = (|| -> Result<Data<T>, String> {
        let vectors = enumerate_all::<T>(n).map_err(|e| e.to_string())?;
        let cycles = vectors
            .iter()
            .map(|v| v.complete().and_then(|d| minimal_cycle(&d)))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| e.to_string())?;
        let paths = vectors.iter().map(t_map).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
        let triangulations =
            vectors.iter().map(full_map).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
        Ok(Data { vectors, cycles, paths, triangulations })
    })();
    let data = match data {
        Ok(d) => d,
        Err(e) => return vec![Check { name: "setup", pass: false, detail: e }],
    };
    let Data { vectors, cycles, paths, triangulations } = &data;

    let mut out = Vec::new();

    out.push(Check::new("enumeration_count", {
        let expected = catalan::<T>(n + 1).map_err(|e| e.to_string());
        expected.and_then(|c| {
            ensure(c.to_usize() == Some(vectors.len()), || format!("{} != catalan = {c}", vectors.len()))?;
            Ok(vectors.len().to_string())
        })
    }));

    out.push(Check::new("unimodular_rule", {
        (|| {
            for c in cycles {
                for d in c.members() {
                    let bad = d.first_rule_violation().map_err(|e| e.to_string())?;
                    ensure(bad.is_none(), || format!("{} fails at row {:?}", d.first_column(), bad))?;
                }
            }
            Ok(format!("{} diamonds", vectors.len()))
        })()
    }));

    out.push(Check::new("d3_bounds", {
        let bad = cycles.iter().filter(|c| !c.members()[0].satisfies_d3()).count();
        if bad == 0 {
            Ok("all".into())
        } else {
            Err(format!("{bad} diamonds fail"))
        }
    }));

    out.push(Check::new("t_map_bijection", {
        let image: BTreeSet<_> = paths.iter().cloned().collect();
        let all: BTreeSet<_> = all_paths(n + 1).into_iter().collect();
        ensure(image.len() == paths.len(), || "t_map is not injective".into())
            .and_then(|_| ensure(image == all, || "image differs from all Dyck paths".into()))
            .map(|_| format!("{} paths", all.len()))
    }));

    out.push(Check::new("t_map_round_trip", {
        TMapInverse::<T>::new(n).map_err(|e| e.to_string()).and_then(|inv| {
            for (v, p) in vectors.iter().zip(paths) {
                let back = inv.get(p).map_err(|e| e.to_string())?;
                ensure(back == *v, || format!("{v} -> {p} -> {back}"))?;
            }
            Ok("identity".into())
        })
    }));

    out.push(Check::new("v_vector_round_trip", {
        (|| {
            for p in all_paths(n + 1) {
                let v = p.to_v_vector().map_err(|e| e.to_string())?;
                let back = from_v_vector(&v).map_err(|e| e.to_string())?;
                ensure(back == p, || format!("{p} -> {v} -> {back}"))?;
            }
            Ok("identity".into())
        })()
    }));

    out.push(Check::new("full_map_bijection", {
        let image: BTreeSet<_> = triangulations.iter().cloned().collect();
        let all: BTreeSet<_> = all_triangulations(n3).into_iter().collect();
        ensure(image.len() == triangulations.len(), || "full map is not injective".into())
            .and_then(|_| ensure(image == all, || "image differs from all triangulations".into()))
            .map(|_| format!("{} triangulations", all.len()))
    }));

    out.push(Check::new("period_divides_order", {
        let bad: Vec<_> = cycles.iter().filter(|c| !n3.is_multiple_of(c.period())).collect();
        let periods: BTreeSet<_> = cycles.iter().map(|c| c.period()).collect();
        ensure(bad.is_empty(), || format!("{} cycles", bad.len())).map(|_| format!("periods {periods:?}"))
    }));

    out.push(Check::new("frieze_valid", {
        (|| {
            for c in cycles {
                let fp = from_cycle(c).map_err(|e| e.to_string())?;
                let direct = from_quiddity(&c.quiddity()).map_err(|e| e.to_string())?;
                ensure(fp == direct, || format!("cycle and quiddity friezes differ for {}", c.members()[0].first_column()))?;
                ensure(fp.period() == c.period(), || "frieze period differs from cycle period".into())?;
            }
            Ok(format!("{} friezes", cycles.len()))
        })()
    }));

    out.push(Check::new("heads_match_quiddity", {
        (|| {
            for (c, t) in cycles.iter().zip(triangulations) {
                let heads: Vec<usize> =
                    c.quiddity().iter().map(|x| x.to_usize().unwrap_or(usize::MAX)).collect();
                ensure(is_rotation(&heads, &quiddity(t)), || format!("{} vs {t}", c.members()[0].first_column()))?;
            }
            Ok("all".into())
        })()
    }));

    out.push(Check::new("cycle_single_orbit", {
        (|| {
            for (c, t) in cycles.iter().zip(triangulations) {
                let orbit = t.orbit();
                ensure(orbit.len() == c.period(), || format!("orbit {} != p {}", orbit.len(), c.period()))?;
                for d in c.members() {
                    let td = full_map(&d.first_column()).map_err(|e| e.to_string())?;
                    ensure(orbit.contains(&td), || format!("{} leaves the orbit", d.first_column()))?;
                }
            }
            Ok("all".into())
        })()
    }));

    out.push(Check::new("conway_coxeter", {
        (|| {
            let mut seen = HashSet::new();
            for t in all_triangulations(n3) {
                let q: Vec<T> = quiddity(&t).into_iter().map(|x| T::from_usize(x).unwrap()).collect();
                let fp = from_quiddity(&q).map_err(|e| format!("{t}: {e}"))?;
                ensure(fp.is_valid(), || format!("{t}: invalid frieze"))?;
                ensure(seen.insert(fp), || format!("{t}: frieze repeats"))?;
            }
            Ok(format!("{} friezes", seen.len()))
        })()
    }));

    out.push(Check::new("ballot_row_sum", {
        f_row::<T>(n).map_err(|e| e.to_string()).and_then(|row| {
            let sum = row.iter().fold(T::zero(), |a, b| a + b.clone());
            ensure(sum.to_usize() == Some(vectors.len()), || format!("row sum {sum}")).map(|_| sum.to_string())
        })
    }));

    out.push(Check::new("shift_involution", {
        (|| {
            let k = n + 1;
            for p in all_paths(k) {
                for i in 1..k {
                    let s = unitary_shift(&p, i).map_err(|e| e.to_string())?;
                    let back = unitary_shift(&s, i).map_err(|e| e.to_string())?;
                    ensure(back == p, || format!("{p} at {i}"))?;
                }
            }
            Ok("all".into())
        })()
    }));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_ranks_pass() {
        for n in 1..=4 {
            let checks = run_checks::<u64>(n);
            for c in &checks {
                assert!(c.pass, "n={n} {}: {}", c.name, c.detail);
            }
        }
        let n3 = run_checks::<crate::Natural>(3);
        assert_eq!(n3[0].name, "enumeration_count");
        assert_eq!(n3[0].detail, "14");
    }

    #[test]
    fn rotation_helper() {
        assert!(is_rotation(&[1, 2, 3], &[2, 3, 1]));
        assert!(!is_rotation(&[1, 2, 3], &[3, 2, 1]));
        assert!(is_rotation::<u8>(&[], &[]));
    }
}
