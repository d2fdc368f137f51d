use anyhow::Result;
use reflgroup::chars::{char_table, fake_degree_closed, fake_degree_imprim};
use reflgroup::classes::gp_descent;
use reflgroup::coxeter::{bruhat_leq, is_finite};
use reflgroup::hecke::{homfly, specialize, Target};
use reflgroup::imprim::reflections_and_hyperplanes;
use reflgroup::invariants::{
    degrees_closed_form, degrees_from_molien, molien_series, poincare_polynomial,
    regular_element_check,
};
use reflgroup::table::{load_table, lookup};
use reflgroup::{BraidWord, DPartition, ImprimGroup, ShephardToddRecord};
use serde_json::{json, Value};

use crate::source::{
    coxeter_matrix, coxeter_system, finite_order, imprim_params, parse_word, parse_word_str,
    word_string, Source,
};
use crate::{Budgets, Command, GroupArg};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

pub struct Output {
    pub text: String,
    pub json: Value,
}

fn out(text: impl Into<String>, json: Value) -> Result<Output> {
    Ok(Output {
        text: text.into(),
        json,
    })
}

fn join<T: ToString>(v: &[T], sep: &str) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(sep)
}

pub fn name(c: &Command) -> &'static str {
    match c {
        Command::Coxeter(_) => "coxeter",
        Command::Roots { .. } => "roots",
        Command::Length { .. } => "length",
        Command::Bruhat { .. } => "bruhat",
        Command::Classes(_) => "classes",
        Command::Descent { .. } => "descent",
        Command::Group { .. } => "group",
        Command::Degrees { .. } => "degrees",
        Command::Molien(_) => "molien",
        Command::Poincare { .. } => "poincare",
        Command::Fakedeg { .. } => "fakedeg",
        Command::Chartable { .. } => "chartable",
        Command::Regular { .. } => "regular",
        Command::Homfly { .. } => "homfly",
        Command::Table { .. } => "table",
    }
}

fn molien_degrees(src: &Source) -> Result<Vec<u32>> {
    let g = src.group();
    Ok(degrees_from_molien(&molien_series(g)?, g.dim())?)
}

fn record_text(r: &ShephardToddRecord) -> String {
    let mut s = format!(
        "{}\n  degrees    {}\n  codegrees  {}\n  order      {}\n  field      {}\n  well-generated {}\n  regular degrees {}",
        r.label,
        join(&r.degrees, ","),
        join(&r.codegrees, ","),
        r.order(),
        r.field,
        if r.well_generated { "yes" } else { "no" },
        join(&r.regular_degrees, ","),
    );
    if let Some(q) = &r.quotient {
        s.push_str(&format!("\n  W/Z(W)     {q}"));
    }
    s
}

pub fn run(cmd: &Command, b: Budgets) -> Result<Output> {
    match cmd {
        Command::Coxeter(arg) => {
            let m = coxeter_matrix(&arg.spec)?;
            if !is_finite(&m) {
                return out(
                    format!("rank {}\ninfinite", m.rank()),
                    json!({ "rank": m.rank(), "finite": false }),
                );
            }
            let (types, order) = finite_order(&m)?;
            let names: Vec<String> = types.iter().map(ToString::to_string).collect();
            out(
                format!(
                    "rank {}\nfinite\ntype {}\norder {order}",
                    m.rank(),
                    names.join(" x ")
                ),
                json!({ "rank": m.rank(), "finite": true, "types": names, "order": order.to_string() }),
            )
        }
        Command::Roots { group, list } => {
            let sys = coxeter_system(&group.spec)?;
            let rs = sys.root_system();
            let mut text = format!("roots {}\npositive {}", rs.len(), rs.num_positive());
            let pos: Vec<Vec<String>> = rs
                .positive_roots()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            if *list {
                for r in &pos {
                    text.push_str(&format!("\n[{}]", r.join(", ")));
                }
            }
            let mut j = json!({ "roots": rs.len(), "positive": rs.num_positive() });
            if *list {
                j["positive_roots"] = json!(pos);
            }
            out(text, j)
        }
        Command::Length { group, word } => {
            let sys = coxeter_system(&group.spec)?;
            let w = sys.element_from_word(&parse_word(word, sys.rank())?)?;
            let red = sys.reduced_word(&w);
            let len = sys.length(&w);
            out(
                format!("length {len}\nreduced word {}", word_string(&red)),
                json!({ "length": len, "reduced_word": red.iter().map(|s| s + 1).collect::<Vec<_>>() }),
            )
        }
        Command::Bruhat { group, y, w } => {
            let sys = coxeter_system(&group.spec)?;
            let ye = sys.element_from_word(&parse_word_str(y, sys.rank())?)?;
            let we = sys.element_from_word(&parse_word_str(w, sys.rank())?)?;
            let leq = bruhat_leq(&sys, &ye, &we);
            out(leq.to_string(), json!({ "leq": leq }))
        }
        Command::Classes(arg) => {
            let src = Source::resolve(arg, b.budget)?;
            let g = src.group();
            let mut text = format!("{} classes, |W| = {}", g.classes().len(), g.order());
            let mut rows = Vec::new();
            for (i, c) in g.classes().classes().iter().enumerate() {
                let rep = src.describe(c.representative);
                text.push_str(&format!(
                    "\n{i:>3}  size {:>6}  lmin {:>3}  {rep}",
                    c.size(),
                    c.l_min
                ));
                rows.push(json!({ "size": c.size(), "l_min": c.l_min, "representative": rep }));
            }
            out(text, json!({ "order": g.order(), "classes": rows }))
        }
        Command::Descent { group, word } => {
            let sys = coxeter_system(&group.spec)?;
            let g = sys.enumerate(b.budget)?;
            let w = sys.element_from_word(&parse_word(word, sys.rank())?)?;
            let x = g
                .index_of(w.perm())
                .ok_or_else(|| reflgroup::Error::Invariant("element not in enumeration".into()))?;
            let path = gp_descent(&g, x)?;
            let mut text = format!("{} (length {})", word_string(&g.word(x)), g.depth(x));
            let mut steps = Vec::new();
            for s in &path.steps {
                let to = word_string(&g.word(s.to));
                text.push_str(&format!(
                    "\n  s{} -> {to} (length {})",
                    s.generator + 1,
                    g.depth(s.to)
                ));
                steps.push(
                    json!({ "generator": s.generator + 1, "to": to, "length": g.depth(s.to) }),
                );
            }
            out(
                text,
                json!({ "start": word_string(&g.word(x)), "steps": steps, "end_length": g.depth(path.end()) }),
            )
        }
        Command::Group { imprim } => {
            let p = imprim_params(imprim)?;
            let ig = ImprimGroup::new(p, b.budget)?;
            let g = ig.group();
            let (refl, hyper) = reflections_and_hyperplanes(g);
            let gens: Vec<String> = ig.generators().iter().map(ToString::to_string).collect();
            let dd = degrees_closed_form(&p);
            out(
                format!(
                    "{p}\norder {}\nreflections {}\nhyperplanes {hyper}\ndegrees {}\ngenerators {}",
                    g.order(),
                    refl.len(),
                    join(&dd.degrees, " "),
                    gens.join("  ")
                ),
                json!({
                    "group": p.to_string(), "order": g.order(), "reflections": refl.len(),
                    "hyperplanes": hyper, "degrees": dd.degrees, "generators": gens,
                }),
            )
        }
        Command::Degrees { group, closed_form } => {
            let degrees = if *closed_form {
                let v = group
                    .imprim
                    .as_ref()
                    .ok_or_else(|| CliError::Usage("--closed-form needs --imprim m p n".into()))?;
                degrees_closed_form(&imprim_params(v)?).degrees
            } else {
                molien_degrees(&Source::resolve(group, b.budget)?)?
            };
            out(join(&degrees, " "), json!({ "degrees": degrees }))
        }
        Command::Molien(arg) => {
            let src = Source::resolve(arg, b.budget)?;
            let m = molien_series(src.group())?;
            out(
                m.to_string(),
                json!({ "numerator": m.num().to_string(), "denominator": m.den().to_string() }),
            )
        }
        Command::Poincare {
            spec,
            imprim,
            degrees,
        } => {
            let degrees = match degrees {
                Some(d) => d.clone(),
                None => {
                    let group = GroupArg {
                        spec: spec.clone(),
                        imprim: imprim.clone(),
                    };
                    molien_degrees(&Source::resolve(&group, b.budget)?)?
                }
            };
            if degrees.contains(&0) {
                return Err(CliError::Usage("degrees must be positive".into()).into());
            }
            let p = poincare_polynomial(&degrees);
            let coeffs: Vec<String> = p.coeffs().iter().map(ToString::to_string).collect();
            out(
                p.render("x"),
                json!({ "degrees": degrees, "coefficients": coeffs }),
            )
        }
        Command::Fakedeg { alpha, imprim } => {
            let a: DPartition = alpha.parse()?;
            let r = match imprim {
                Some(v) => fake_degree_imprim(&imprim_params(v)?, &a)?,
                None => fake_degree_closed(&a)?,
            };
            let coeffs: Vec<String> = r.coeffs().iter().map(ToString::to_string).collect();
            out(
                r.render("x"),
                json!({ "alpha": a.to_string(), "coefficients": coeffs }),
            )
        }
        Command::Chartable { d, n } => {
            if d * n > b.max_table {
                return Err(CliError::Budget(format!(
                    "d·n = {} exceeds the limit {}",
                    d * n,
                    b.max_table
                ))
                .into());
            }
            let t = char_table(*d, *n)?;
            let labels: Vec<String> = t.labels.iter().map(ToString::to_string).collect();
            let rows: Vec<Vec<String>> = t
                .values
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let width = rows
                .iter()
                .flatten()
                .chain(&labels)
                .map(|s| s.chars().count())
                .max()
                .unwrap_or(1);
            let label_width = labels.iter().map(|s| s.chars().count()).max().unwrap_or(1);
            let pad = |s: &str, w: usize| {
                format!("{}{s}", " ".repeat(w.saturating_sub(s.chars().count())))
            };
            let mut text = format!(
                "{}  {}",
                pad("", label_width),
                labels
                    .iter()
                    .map(|l| pad(l, width))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for (l, r) in labels.iter().zip(&rows) {
                text.push_str(&format!(
                    "\n{}  {}",
                    pad(l, label_width),
                    r.iter()
                        .map(|v| pad(v, width))
                        .collect::<Vec<_>>()
                        .join(" ")
                ));
            }
            let cent: Vec<String> = t.centralizers.iter().map(ToString::to_string).collect();
            out(
                text,
                json!({ "d": d, "n": n, "labels": labels, "centralizers": cent, "values": rows }),
            )
        }
        Command::Regular { group, order } => {
            let src = Source::resolve(group, b.budget)?;
            let dd = src.degree_data(molien_degrees(&src)?)?;
            let numbers = dd.regular_numbers();
            let mut text = format!("regular numbers {}", join(&numbers, " "));
            let mut j = json!({ "degrees": dd.degrees, "codegrees": dd.codegrees, "regular_numbers": numbers });
            if let Some(d) = *order {
                let g = src.group();
                let mut found = None;
                for c in g.classes().classes() {
                    let v = regular_element_check(g, c.representative, d, &dd.coexponents())?;
                    if v.regular {
                        found = Some((c.representative, v));
                        break;
                    }
                }
                match found {
                    Some((w, v)) => {
                        let rep = src.describe(w);
                        text.push_str(&format!(
                            "\n{d}: regular element {rep}, eigenspace dimension {}",
                            v.eigenspace_dim
                        ));
                        j["element"] = json!({ "order": d, "element": rep, "eigenspace_dim": v.eigenspace_dim });
                    }
                    None => {
                        text.push_str(&format!("\n{d}: no regular element"));
                        j["element"] = Value::Null;
                    }
                }
            }
            out(text, j)
        }
        Command::Homfly {
            braid,
            jones,
            alexander,
            tx,
        } => {
            let w: BraidWord = braid.parse()?;
            let x = homfly(&w);
            let target = if *jones {
                Some(Target::Jones)
            } else if *alexander {
                Some(Target::Alexander)
            } else if *tx {
                Some(Target::HomflyTx)
            } else {
                None
            };
            let text = match target {
                Some(t) => specialize(&x, t)?.to_string(),
                None => x.render(),
            };
            out(
                text.clone(),
                json!({ "braid": w.to_string(), "components": x.components, "homfly": x.render(), "value": text }),
            )
        }
        Command::Table { label } => match label {
            Some(l) => {
                let r = lookup(l)?;
                out(record_text(&r), serde_json::to_value(&r)?)
            }
            None => {
                let all = load_table()?;
                let text = all.iter().map(record_text).collect::<Vec<_>>().join("\n");
                out(text, serde_json::to_value(&all)?)
            }
        },
    }
}
