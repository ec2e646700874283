use std::fmt::Write;

use serde::Serialize;
use serde_json::{json, Value};

use semirep::corpus::{regular_rees_sweep, small_semigroups};
use semirep::involution::{enumerate_involutions, inverse_inducing_involution};
use semirep::rees::coordinatize_jclass;
use semirep::schutz::{
    is_inverse_via_reps_with, nonzero_regular_classes, schutzenberger_pair, star_representable_all_with,
    DecisionOptions, InverseVerdict,
};
use semirep::{
    brute_force_is_inverse, green_structure, is_semisimple_algebra, maximal_subgroup, principal_series, Error,
    GroupData, PreunitaryReport, SemigroupTable, SgtFile,
};

/// Largest order accepted by the small-semigroup sweep.
pub const CORPUS_ORDER_LIMIT: usize = 5;

pub struct Settings {
    pub seed: u64,
    pub eps: f64,
    pub oracle: bool,
}

impl Settings {
    fn options(&self) -> DecisionOptions<f64> {
        DecisionOptions {
            seed: self.seed,
            eps: self.eps,
            oracle: self.oracle,
        }
    }
}

pub struct Output {
    pub json: Value,
    pub text: String,
}

fn to_value(v: impl Serialize) -> Value {
    serde_json::to_value(v).expect("verdicts serialize")
}

fn labels(s: &SemigroupTable, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| s.label(x)).collect()
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|&x| x + 1).collect()
}

#[derive(Serialize)]
struct JClassInfo {
    elements: Vec<String>,
    regular: bool,
    l_classes: usize,
    r_classes: usize,
    h_class_size: usize,
    group_order: Option<usize>,
    idempotents: Vec<String>,
}

pub fn analyze(s: &SemigroupTable) -> Result<Output, Error> {
    let green = green_structure(s);
    let series = principal_series(s);
    let mut classes = Vec::new();
    for (j, class) in green.jclasses.iter().enumerate() {
        let count = |of: &[usize]| {
            let mut ids: Vec<usize> = class.iter().map(|&x| of[x]).collect();
            ids.sort_unstable();
            ids.dedup();
            ids.len()
        };
        let idem: Vec<usize> = green
            .idempotents
            .iter()
            .copied()
            .filter(|&e| green.jclass_of[e] == j)
            .collect();
        let group_order = match idem.first() {
            Some(&e) => Some(maximal_subgroup(s, e)?.order()),
            None => None,
        };
        classes.push(JClassInfo {
            elements: labels(s, class),
            regular: green.regular_j[j],
            l_classes: count(&green.lclass_of),
            r_classes: count(&green.rclass_of),
            h_class_size: green.hclasses[green.hclass_of[class[0]]].len(),
            group_order,
            idempotents: labels(s, &idem),
        });
    }
    let regular = s.is_regular();
    let inverse = brute_force_is_inverse(s).is_inverse;
    let semisimple = is_semisimple_algebra(s);
    let json = json!({
        "order": s.len(),
        "zero": s.zero().map(|z| s.label(z)),
        "identity": s.identity().map(|e| s.label(e)),
        "jclasses": classes,
        "principal_series": series.quotient_jclass,
        "regular": regular,
        "inverse": inverse,
        "semisimple": semisimple,
    });
    let mut text = String::new();
    let _ = writeln!(text, "order {}, {} J-classes", s.len(), classes.len());
    for (j, c) in classes.iter().enumerate() {
        let _ = writeln!(
            text,
            "  J{j}: {{{}}} {} ({}x{} H-classes of size {}{})",
            c.elements.join(", "),
            if c.regular { "regular" } else { "non-regular" },
            c.r_classes,
            c.l_classes,
            c.h_class_size,
            c.group_order.map_or(String::new(), |g| format!(", group of order {g}"))
        );
    }
    let chain: Vec<String> = series.quotient_jclass.iter().map(|j| format!("J{j}")).collect();
    let _ = writeln!(text, "principal series: {}", chain.join(" < "));
    let _ = writeln!(text, "regular: {regular}\ninverse: {inverse}\nsemisimple: {semisimple}");
    Ok(Output { json, text })
}

#[derive(Serialize)]
struct IsInverseOut {
    regular: bool,
    #[serde(flatten)]
    verdict: InverseVerdict,
}

pub fn is_inverse(s: &SemigroupTable, settings: &Settings) -> Result<Output, Error> {
    // A non-regular semigroup is not inverse; the representation test needs
    // regular classes throughout, so it is not run.
    let out = if s.is_regular() {
        IsInverseOut {
            regular: true,
            verdict: is_inverse_via_reps_with(s, &settings.options())?,
        }
    } else {
        let oracle_agrees = settings.oracle.then(|| !brute_force_is_inverse(s).is_inverse);
        if oracle_agrees == Some(false) {
            return Err(Error::OracleMismatch {
                reps: false,
                brute: true,
            });
        }
        IsInverseOut {
            regular: false,
            verdict: InverseVerdict {
                is_inverse: false,
                jclasses: Vec::new(),
                oracle_agrees,
            },
        }
    };
    let mut text = format!("inverse: {}\n", out.verdict.is_inverse);
    if !out.regular {
        text.push_str("not regular\n");
    }
    for v in &out.verdict.jclasses {
        let _ = writeln!(
            text,
            "  J{}: size {}, group order {}, {}x{}, semiunitary {}{}",
            v.jclass,
            v.size,
            v.group_order,
            v.s,
            v.t,
            v.semiunitary,
            v.failing_element
                .as_ref()
                .map_or(String::new(), |e| format!(" (fails at {e})"))
        );
    }
    if let Some(a) = out.verdict.oracle_agrees {
        let _ = writeln!(text, "oracle agrees: {a}");
    }
    Ok(Output {
        json: to_value(&out),
        text,
    })
}

pub fn involutions(sgt: &SgtFile) -> Result<Output, Error> {
    let s = &sgt.table;
    let all = enumerate_involutions(s)?;
    let inverse = inverse_inducing_involution(s)?;
    let list: Vec<Value> = all
        .iter()
        .map(|f| {
            json!({
                "map": one_based(&f.map),
                "labels": labels(s, &f.map),
                "chooses_inverses": f.induces_inverse(s),
            })
        })
        .collect();
    let declared = sgt.involution.as_ref().map(|m| {
        json!({
            "map": one_based(m),
            "valid": s.check_involution(m).is_ok(),
            "inverse_inducing": inverse.as_ref().is_some_and(|f| &f.map == m),
        })
    });
    let json = json!({
        "count": all.len(),
        "involutions": list,
        "inverse_inducing": inverse.as_ref().map(|f| one_based(&f.map)),
        "declared": declared,
    });
    let inducing = all.iter().filter(|f| f.induces_inverse(s)).count();
    let mut text = format!(
        "{} involutions, {} inverse-inducing\n",
        all.len(),
        usize::from(inverse.is_some())
    );
    for f in &all {
        let mark = if inverse.as_ref().is_some_and(|g| g.map == f.map) {
            " *"
        } else {
            ""
        };
        let _ = writeln!(text, "  [{}]{mark}", labels(s, &f.map).join(" "));
    }
    if inverse.is_none() && inducing > 0 {
        let _ = writeln!(
            text,
            "{inducing} involution(s) choose generalized inverses, but inverses are not unique"
        );
    }
    if let Some(m) = &sgt.involution {
        let _ = writeln!(text, "declared involution valid: {}", s.check_involution(m).is_ok());
    }
    Ok(Output { json, text })
}

pub fn rees(s: &SemigroupTable) -> Result<Output, Error> {
    let green = green_structure(s);
    let mut classes = Vec::new();
    let mut text = String::new();
    for j in nonzero_regular_classes(s, &green) {
        let c = coordinatize_jclass(s, &green, j)?;
        let group = labels(s, &c.group.carrier);
        let sandwich: Vec<Vec<String>> =
            c.p.iter()
                .map(|row| {
                    row.iter()
                        .map(|e| e.map_or("0".to_string(), |g| group[g].clone()))
                        .collect()
                })
                .collect();
        let _ = writeln!(
            text,
            "J{j}: e = {}, {} x {}, group {{{}}}{}",
            s.label(c.e),
            c.s(),
            c.t(),
            group.join(", "),
            if c.sandwich_normalized { ", P = I" } else { "" }
        );
        let _ = writeln!(text, "  x: {}", labels(s, &c.x).join(" "));
        let _ = writeln!(text, "  y: {}", labels(s, &c.y).join(" "));
        for row in &sandwich {
            let _ = writeln!(text, "  | {} |", row.join(" "));
        }
        classes.push(json!({
            "jclass": j,
            "idempotent": s.label(c.e),
            "s": c.s(),
            "t": c.t(),
            "group": group,
            "x": labels(s, &c.x),
            "y": labels(s, &c.y),
            "sandwich": sandwich,
            "sandwich_normalized": c.sandwich_normalized,
        }));
    }
    Ok(Output {
        json: json!({ "jclasses": classes }),
        text,
    })
}

#[derive(Serialize)]
struct ElementRow {
    element: String,
    left: PreunitaryReport,
    right: PreunitaryReport,
}

pub fn reps(s: &SemigroupTable, settings: &Settings) -> Result<Output, Error> {
    let green = green_structure(s);
    let mut classes = Vec::new();
    let mut text = String::new();
    for j in nonzero_regular_classes(s, &green) {
        let pair = schutzenberger_pair::<f64>(s, &green, j, settings.seed)?;
        let rows: Vec<ElementRow> = s
            .elements()
            .map(|a| ElementRow {
                element: s.label(a),
                left: semirep::is_preunitary(&pair.left.images[a], settings.eps),
                right: semirep::is_preunitary(&pair.right.images[a], settings.eps),
            })
            .collect();
        let semiunitary = rows.iter().all(|r| r.left.preunitary && r.right.preunitary);
        let _ = writeln!(
            text,
            "J{j}: left dim {}, right dim {}, semiunitary {semiunitary}",
            pair.left.dim, pair.right.dim
        );
        for r in &rows {
            let mark = |p: &PreunitaryReport| if p.preunitary { "ok" } else { "FAIL" };
            let _ = writeln!(
                text,
                "  {:>12}  left {:4}  right {:4}",
                r.element,
                mark(&r.left),
                mark(&r.right)
            );
        }
        classes.push(json!({
            "jclass": j,
            "left_dim": pair.left.dim,
            "right_dim": pair.right.dim,
            "group_irrep_dims": pair.group_irreps.iter().map(|g| g.dim).collect::<Vec<_>>(),
            "semiunitary": semiunitary,
            "elements": rows,
        }));
    }
    Ok(Output {
        json: json!({ "jclasses": classes }),
        text,
    })
}

pub fn star_check(s: &SemigroupTable, star: &[usize], settings: &Settings) -> Result<Output, Error> {
    s.check_involution(star)?;
    let v = star_representable_all_with(s, star, &settings.options())?;
    let mut text = format!(
        "semisimple: {}\ncharacter condition: {}\n∗-forms constructed: {}\nrepresentable: {}\n",
        v.semisimple, v.character_condition, v.star_forms_constructed, v.representable
    );
    for d in &v.irreps {
        let _ = writeln!(
            text,
            "  J{} irrep {} (dim {}): hom dim {}{}{}",
            d.jclass,
            d.group_irrep,
            d.dim,
            d.hom_dim,
            d.star_form_defect
                .map_or(String::new(), |x| format!(", ∗-form defect {x:.1e}")),
            d.obstruction
                .map_or(String::new(), |(p, q)| format!(", obstructed: signature ({p}, {q})"))
        );
    }
    Ok(Output {
        json: to_value(&v),
        text,
    })
}

#[derive(Serialize, Default, Clone)]
struct OrderStats {
    order: usize,
    semigroups: usize,
    regular: usize,
    inverse: usize,
    reps_agree: usize,
    remark_agree: usize,
}

/// Maps `f` over `items` on all available cores, preserving order.
fn parallel_map<T: Sync, R: Send>(items: &[T], f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = items.len().div_ceil(workers).max(1);
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|part| scope.spawn(|| part.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("corpus worker panicked"))
            .collect()
    })
}

pub fn corpus(max_order: usize, settings: &Settings) -> Result<Output, Error> {
    if max_order > CORPUS_ORDER_LIMIT {
        return Err(Error::SizeLimit {
            size: max_order,
            limit: CORPUS_ORDER_LIMIT,
        });
    }
    let opts = DecisionOptions {
        oracle: false,
        ..settings.options()
    };
    let check = |s: &SemigroupTable| -> Result<(bool, bool, bool, bool), Error> {
        let brute = brute_force_is_inverse(s);
        let regular = s.is_regular();
        let reps_ok = if regular {
            is_inverse_via_reps_with(s, &opts)?.is_inverse == brute.is_inverse
        } else {
            !brute.is_inverse
        };
        let survivor = inverse_inducing_involution(s)?.map(|f| f.map);
        let remark_ok = survivor == brute.inverse_map.filter(|_| brute.is_inverse);
        Ok((regular, brute.is_inverse, reps_ok, remark_ok))
    };

    let mut orders = Vec::new();
    for n in 1..=max_order {
        let tables = small_semigroups(n);
        let results = parallel_map(&tables, |s| check(s));
        let mut st = OrderStats {
            order: n,
            semigroups: tables.len(),
            ..Default::default()
        };
        for r in results {
            let (regular, inverse, reps_ok, remark_ok) = r?;
            st.regular += usize::from(regular);
            st.inverse += usize::from(inverse);
            st.reps_agree += usize::from(reps_ok);
            st.remark_agree += usize::from(remark_ok);
        }
        orders.push(st);
    }

    let sweep = regular_rees_sweep(2, &[GroupData::trivial(), GroupData::cyclic(2)]);
    let results = parallel_map(&sweep, |r| check(&r.table));
    let mut rees = OrderStats {
        semigroups: sweep.len(),
        ..Default::default()
    };
    for r in results {
        let (_, inverse, reps_ok, remark_ok) = r?;
        rees.regular += 1;
        rees.inverse += usize::from(inverse);
        rees.reps_agree += usize::from(reps_ok);
        rees.remark_agree += usize::from(remark_ok);
    }

    let all_agree = orders
        .iter()
        .chain([&rees])
        .all(|o| o.reps_agree == o.semigroups && o.remark_agree == o.semigroups);
    let mut text = String::from("order  semigroups  regular  inverse  reps-agree  remark-agree\n");
    for o in &orders {
        let _ = writeln!(
            text,
            "{:>5}  {:>10}  {:>7}  {:>7}  {:>10}  {:>12}",
            o.order, o.semigroups, o.regular, o.inverse, o.reps_agree, o.remark_agree
        );
    }
    let _ = writeln!(
        text,
        "Rees sweep (|I|,|J| <= 2, G trivial or C2): {} regular, {} inverse, {} agree",
        rees.semigroups, rees.inverse, rees.reps_agree
    );
    let _ = writeln!(text, "all agree: {all_agree}");
    if !all_agree && settings.oracle {
        return Err(Error::Invariant(
            "corpus sweep found a disagreement with brute force".into(),
        ));
    }
    Ok(Output {
        json: json!({
            "small_semigroups": orders,
            "rees_sweep": rees,
            "all_agree": all_agree,
        }),
        text,
    })
}
