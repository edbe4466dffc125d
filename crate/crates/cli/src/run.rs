//! Subcommand dispatch.

use std::time::Instant;

use factorinv::invariants;
use factorinv::kernel::{self, IntVector};
use factorinv::monoid::{block_monoid, davenport_constant};
use num_bigint::BigInt;

use crate::output::{
    render_factorizations, render_int, render_int_set, render_pairs,
    render_rational, render_report_value, render_u64, render_u64_set, render_vector_set,
    ReportDocument,
};
use crate::spec::{
    parse_element, parse_inline_generators, parse_matrix, parse_scalar_list, parse_vector_list,
    Monoid, SemigroupSpec,
};
use crate::{Cli, CliError, Command, Flavor};

fn malformed(msg: impl Into<String>) -> CliError {
    CliError::Malformed(msg.into())
}

fn load_spec(cli: &Cli) -> Result<Option<SemigroupSpec>, CliError> {
    if let Some(path) = &cli.semigroup {
        let text = std::fs::read_to_string(path)
            .map_err(|e| malformed(format!("cannot read {}: {e}", path.display())))?;
        let spec: SemigroupSpec = serde_json::from_str(&text)
            .map_err(|e| malformed(format!("cannot parse {}: {e}", path.display())))?;
        return Ok(Some(spec));
    }
    if let Some(gens) = &cli.gens {
        return Ok(Some(parse_inline_generators(gens).map_err(malformed)?));
    }
    if let (Some(moduli), Some(elements)) = (&cli.moduli, &cli.elements) {
        return Ok(Some(SemigroupSpec::Block {
            moduli: parse_scalar_list(moduli).map_err(malformed)?,
            elements: parse_vector_list(elements).map_err(malformed)?,
        }));
    }
    if let Some(matrix) = &cli.matrix {
        let rows = parse_matrix(matrix).map_err(malformed)?;
        let moduli = match &cli.moduli {
            Some(m) => parse_scalar_list(m).map_err(malformed)?,
            None => Vec::new(),
        };
        return Ok(Some(SemigroupSpec::Equations { matrix: rows, moduli }));
    }
    Ok(None)
}

fn need_spec(cli: &Cli) -> Result<SemigroupSpec, CliError> {
    load_spec(cli)?.ok_or_else(|| {
        malformed("no semigroup given: use --semigroup, --gens, --matrix or --moduli/--elements")
    })
}

fn need_monoid(cli: &Cli) -> Result<(SemigroupSpec, Monoid), CliError> {
    let spec = need_spec(cli)?;
    let monoid = spec.instantiate()?;
    Ok((spec, monoid))
}

fn element_u64(cli: &Cli) -> Result<u64, CliError> {
    let text = cli
        .element
        .as_ref()
        .ok_or_else(|| malformed("this operation needs --element"))?;
    let v = parse_element(text).map_err(malformed)?;
    if v.len() != 1 {
        return Err(malformed("a numerical semigroup element is a single integer"));
    }
    u64::try_from(v[0]).map_err(|_| CliError::Semantic(format!("{} is not an element", v[0])))
}

fn element_vector(cli: &Cli) -> Result<IntVector, CliError> {
    let text = cli
        .element
        .as_ref()
        .ok_or_else(|| malformed("this operation needs --element"))?;
    Ok(IntVector::from_i64(&parse_element(text).map_err(malformed)?))
}

fn matrix_rows(cli: &Cli) -> Result<Option<Vec<IntVector>>, CliError> {
    match &cli.matrix {
        Some(text) => {
            let rows = parse_matrix(text).map_err(malformed)?;
            Ok(Some(rows.iter().map(|r| IntVector::from_i64(r)).collect()))
        }
        None => Ok(None),
    }
}

fn moduli_options(cli: &Cli, rows: usize) -> Result<Vec<Option<BigInt>>, CliError> {
    match &cli.moduli {
        Some(text) => {
            let ds: Vec<u64> = parse_scalar_list(text).map_err(malformed)?;
            if ds.len() != rows {
                return Err(malformed(format!(
                    "{} moduli for {} rows",
                    ds.len(),
                    rows
                )));
            }
            Ok(ds
                .into_iter()
                .map(|d| if d == 0 { None } else { Some(BigInt::from(d)) })
                .collect())
        }
        None => Ok(vec![None; rows]),
    }
}

/// The generator matrix to run kernel subcommands on: an explicit
/// `--matrix`, or the atoms of the given semigroup as columns.
fn kernel_matrix(cli: &Cli) -> Result<Vec<IntVector>, CliError> {
    if let Some(rows) = matrix_rows(cli)? {
        return Ok(rows);
    }
    let (_, monoid) = need_monoid(cli)?;
    let affine = match monoid {
        Monoid::Numerical(s) => s.as_affine(),
        Monoid::Affine(a) => a,
    };
    let atoms = affine.minimal_generators()?.to_vec();
    let dim = affine.dimension();
    Ok((0..dim)
        .map(|r| IntVector::new(atoms.iter().map(|g| g.get(r).clone()).collect()))
        .collect())
}

fn block_inputs(cli: &Cli) -> Result<(Vec<u64>, Vec<IntVector>), CliError> {
    if let Some(SemigroupSpec::Block { moduli, elements }) = load_spec(cli)? {
        let els = elements.iter().map(|g| IntVector::from_i64(g)).collect();
        return Ok((moduli, els));
    }
    Err(malformed(
        "block monoids need --moduli and --elements (or a block definition file)",
    ))
}

pub fn run(cli: &Cli) -> Result<ReportDocument, CliError> {
    match cli.command {
        Command::Factorize => {
            let (spec, monoid) = need_monoid(cli)?;
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            let rendered = match &monoid {
                Monoid::Numerical(s) => {
                    let fiber = s.factorizations(element_u64(cli)?);
                    render_factorizations(&fiber)
                }
                Monoid::Affine(a) => {
                    let fiber = a.factorizations(&element_vector(cli)?)?;
                    render_factorizations(&fiber)
                }
            };
            doc.push("factorizations", rendered);
            doc.timing("factorizations", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Lengths => {
            let (spec, monoid) = need_monoid(cli)?;
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            let rendered = match &monoid {
                Monoid::Numerical(s) => {
                    let l = invariants::length_set_numerical(s, element_u64(cli)?)?;
                    doc.note("lengths", "dynamic programming over element lengths");
                    render_int_set(l.lengths())
                }
                Monoid::Affine(a) => {
                    let l = invariants::length_set(a, &element_vector(cli)?)?;
                    doc.note("lengths", "fiber enumeration");
                    render_int_set(l.lengths())
                }
            };
            doc.push("lengths", rendered);
            doc.timing("lengths", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Apery => {
            let (spec, monoid) = need_monoid(cli)?;
            let Monoid::Numerical(s) = monoid else {
                return Err(CliError::Semantic(
                    "Apéry sets are computed for numerical semigroups".into(),
                ));
            };
            let n = match &cli.element {
                Some(_) => element_u64(cli)?,
                None => s.multiplicity(),
            };
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            let ap = s.apery_set(n)?;
            doc.push("apery", render_u64_set(&ap));
            doc.timing("apery", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Betti => {
            let (spec, monoid) = need_monoid(cli)?;
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            match &monoid {
                Monoid::Numerical(s) => {
                    doc.note("betti", "Apéry candidate path");
                    doc.push("betti", render_u64_set(&s.betti_elements()));
                }
                Monoid::Affine(a) => {
                    doc.note("betti", "Graver candidate path");
                    doc.push("betti", render_vector_set(a.betti_elements()?));
                }
            }
            doc.timing("betti", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Presentation => {
            let (spec, monoid) = need_monoid(cli)?;
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            let pairs = match &monoid {
                Monoid::Numerical(s) => s.minimal_presentation(),
                Monoid::Affine(a) => a.minimal_presentation()?,
            };
            doc.push("presentation", render_pairs(&pairs));
            doc.timing("presentation", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Primitive => {
            let (spec, monoid) = need_monoid(cli)?;
            let affine = match monoid {
                Monoid::Numerical(s) => s.as_affine(),
                Monoid::Affine(a) => a,
            };
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            doc.push("primitive", render_vector_set(&affine.primitive_elements()?));
            doc.timing("primitive", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Graver => {
            let rows = kernel_matrix(cli)?;
            let mut doc = ReportDocument::new(load_spec(cli)?, cli.timings);
            let start = Instant::now();
            let basis = kernel::graver_basis(&rows)?;
            doc.note("graver", "one representative per sign pair");
            doc.push("graver", render_vector_set(&basis));
            doc.timing("graver", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Hilbert => {
            let rows = match matrix_rows(cli)? {
                Some(rows) => rows,
                None => {
                    return Err(malformed(
                        "hilbert needs --matrix (with optional --moduli)",
                    ))
                }
            };
            let moduli = moduli_options(cli, rows.len())?;
            let mut doc = ReportDocument::new(None, cli.timings);
            let start = Instant::now();
            let basis = kernel::hilbert_basis(&rows, &moduli)?;
            doc.push("hilbert", render_vector_set(&basis));
            doc.timing("hilbert", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Circuits => {
            let rows = kernel_matrix(cli)?;
            let mut doc = ReportDocument::new(load_spec(cli)?, cli.timings);
            let start = Instant::now();
            let circuits = kernel::circuits(&rows)?;
            doc.note("circuits", "content-normalized, one per sign pair");
            doc.push("circuits", render_vector_set(&circuits));
            doc.timing("circuits", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Elasticity => {
            let (spec, monoid) = need_monoid(cli)?;
            let affine = match &monoid {
                Monoid::Numerical(s) => s.as_affine(),
                Monoid::Affine(a) => a.clone(),
            };
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            if cli.element.is_some() {
                let m = match &monoid {
                    Monoid::Numerical(_) => IntVector::from_i64(&[element_u64(cli)? as i64]),
                    Monoid::Affine(_) => element_vector(cli)?,
                };
                doc.push(
                    "elasticity",
                    render_rational(&invariants::elasticity_element(&affine, &m)?),
                );
            } else {
                doc.note("elasticity", "circuits of the kernel congruence");
                doc.push("elasticity", render_rational(&invariants::elasticity(&affine)?));
            }
            doc.timing("elasticity", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Delta => {
            let (spec, monoid) = need_monoid(cli)?;
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            match &monoid {
                Monoid::Numerical(s) => {
                    if cli.element.is_some() {
                        let l = invariants::length_set_numerical(s, element_u64(cli)?)?;
                        let deltas: Vec<BigInt> = l.deltas();
                        doc.push("delta", render_int_set(&dedup_sorted(deltas)));
                    } else {
                        let bound = cli.bound.ok_or_else(|| {
                            malformed("the delta scan needs --bound (and accepts --periodicity-bound)")
                        })?;
                        let scan =
                            invariants::delta_set_numerical(s, bound, cli.periodicity_bound)?;
                        doc.note(
                            "delta",
                            format!(
                                "scan of all elements up to {bound}; complete: {}",
                                scan.complete
                            ),
                        );
                        doc.push("delta", render_u64_set(&scan.deltas));
                        if let Some(min) = invariants::delta_min_numerical(s) {
                            doc.push("delta_min", render_u64(min));
                        }
                        if let Some(max) = invariants::delta_max_numerical(s) {
                            doc.push("delta_max", render_u64(max));
                        }
                    }
                }
                Monoid::Affine(a) => {
                    if cli.element.is_some() {
                        let deltas = invariants::delta_element(a, &element_vector(cli)?)?;
                        doc.push("delta", render_int_set(&deltas));
                    } else {
                        doc.note("delta", "min = gcd and Betti-maximum formulas");
                        match invariants::delta_min(a)? {
                            Some(min) => doc.push("delta_min", render_int(&min)),
                            None => doc.push("delta", render_int_set(&[])),
                        }
                        if let Some(max) = invariants::delta_max(a)? {
                            doc.push("delta_max", render_int(&max));
                        }
                    }
                }
            }
            doc.timing("delta", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Catenary => {
            let (spec, monoid) = need_monoid(cli)?;
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            let affine = match &monoid {
                Monoid::Numerical(s) => s.as_affine(),
                Monoid::Affine(a) => a.clone(),
            };
            let element = match (&cli.element, &monoid) {
                (Some(_), Monoid::Numerical(_)) => {
                    Some(IntVector::from_i64(&[element_u64(cli)? as i64]))
                }
                (Some(_), Monoid::Affine(_)) => Some(element_vector(cli)?),
                (None, _) => None,
            };
            let key = "catenary";
            match (cli.flavor, element) {
                (Flavor::Plain, Some(m)) => {
                    doc.push(key, render_int(&invariants::catenary_element(&affine, &m)?));
                }
                (Flavor::Plain, None) => match &monoid {
                    Monoid::Numerical(s) => {
                        doc.note(key, "Apéry candidate path");
                        doc.push(key, render_int(&invariants::catenary_numerical(s)?));
                    }
                    Monoid::Affine(a) => {
                        doc.note(key, "maximum over Betti elements");
                        doc.push(key, render_int(&invariants::catenary(a)?));
                    }
                },
                (Flavor::Equal, Some(m)) => {
                    doc.push(
                        key,
                        render_int(&invariants::equal_catenary_element(&affine, &m)?),
                    );
                }
                (Flavor::Equal, None) => {
                    doc.note(key, "catenary degree of the equal-length lift");
                    doc.push(key, render_int(&invariants::equal_catenary(&affine)?));
                }
                (Flavor::Homogeneous, Some(_)) => {
                    return Err(malformed(
                        "--flavor homogeneous is a semigroup-level invariant; drop --element",
                    ));
                }
                (Flavor::Homogeneous, None) => {
                    doc.note(key, "catenary degree of the homogeneous lift");
                    doc.push(key, render_int(&invariants::homogeneous_catenary(&affine)?));
                }
                (Flavor::Adjacent, Some(m)) => {
                    doc.push(
                        key,
                        render_int(&invariants::adjacent_catenary_element(&affine, &m)?),
                    );
                }
                (Flavor::Adjacent, None) => {
                    return Err(malformed(
                        "--flavor adjacent is an element invariant; pass --element",
                    ));
                }
                (Flavor::Monotone, Some(m)) => {
                    let value = invariants::equal_catenary_element(&affine, &m)?
                        .max(invariants::adjacent_catenary_element(&affine, &m)?);
                    doc.push(key, render_int(&value));
                }
                (Flavor::Monotone, None) => {
                    doc.note(key, "maximum over projected primitives of the homogeneous lift");
                    let value = match &monoid {
                        Monoid::Numerical(s) => invariants::monotone_catenary_numerical(s)?,
                        Monoid::Affine(a) => invariants::monotone_catenary(a)?,
                    };
                    doc.push(key, render_int(&value));
                }
            }
            doc.timing(key, start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Tame => {
            let (spec, monoid) = need_monoid(cli)?;
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            match &monoid {
                Monoid::Numerical(s) => {
                    doc.note("tame", "Apéry candidate path");
                    doc.push("tame", render_int(&invariants::tame_numerical(s)?));
                }
                Monoid::Affine(a) => {
                    doc.note("tame", "minimal factorizations of the atom principal ideals");
                    doc.push("tame", render_int(&invariants::tame(a)?));
                }
            }
            doc.timing("tame", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Omega => {
            let (spec, monoid) = need_monoid(cli)?;
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            match &monoid {
                Monoid::Numerical(s) => {
                    doc.note("omega", "Apéry shortcut");
                    let value = match &cli.element {
                        Some(_) => invariants::omega_element_numerical(s, element_u64(cli)?)?,
                        None => invariants::omega_numerical(s)?,
                    };
                    doc.push("omega", render_int(&value));
                }
                Monoid::Affine(a) => {
                    doc.note("omega", "principal-ideal minimal factorizations");
                    let value = match &cli.element {
                        Some(_) => invariants::omega_element(a, &element_vector(cli)?)?,
                        None => invariants::omega(a)?,
                    };
                    doc.push("omega", render_int(&value));
                }
            }
            doc.timing("omega", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Denumerant => {
            let (spec, monoid) = need_monoid(cli)?;
            let mut doc = ReportDocument::new(Some(spec), cli.timings);
            let start = Instant::now();
            match &monoid {
                Monoid::Numerical(s) => {
                    if cli.element.is_some() {
                        let d = invariants::denumerant_numerical(s, element_u64(cli)?)?;
                        doc.push("denumerant", render_u64(d));
                    } else {
                        let md = invariants::max_denumerant(s, cli.bound)?;
                        doc.note(
                            "max_denumerant",
                            format!(
                                "scanned elements up to {} ({}); attained at {}",
                                md.bound_used,
                                if md.bound_supplied {
                                    "caller-supplied bound"
                                } else {
                                    "heuristic default bound; exact only if confirmed"
                                },
                                md.witness
                            ),
                        );
                        doc.push("max_denumerant", render_u64(md.value));
                    }
                }
                Monoid::Affine(a) => {
                    let m = element_vector(cli)?;
                    doc.push("denumerant", render_int(&invariants::denumerant(a, &m)?));
                }
            }
            doc.timing("denumerant", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Blockmonoid => {
            let (moduli, elements) = block_inputs(cli)?;
            let mut doc = ReportDocument::new(
                Some(SemigroupSpec::Block {
                    moduli: moduli.clone(),
                    elements: elements
                        .iter()
                        .map(|g| {
                            g.entries()
                                .iter()
                                .map(|x| i64::try_from(x).unwrap_or(0))
                                .collect()
                        })
                        .collect(),
                }),
                cli.timings,
            );
            let start = Instant::now();
            let monoid = block_monoid(&moduli, &elements)?;
            doc.note("generators", "minimal zero-sum sequences");
            doc.push("generators", render_vector_set(monoid.minimal_generators()?));
            doc.timing("generators", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Davenport => {
            let (moduli, elements) = block_inputs(cli)?;
            let mut doc = ReportDocument::new(None, cli.timings);
            let start = Instant::now();
            let d = davenport_constant(&moduli, &elements)?;
            doc.push("davenport", render_int(&d));
            doc.timing("davenport", start.elapsed().as_millis());
            Ok(doc)
        }

        Command::Report => {
            let (spec, monoid) = need_monoid(cli)?;
            run_report(cli, spec, monoid)
        }
    }
}

fn dedup_sorted(mut xs: Vec<BigInt>) -> Vec<BigInt> {
    xs.sort();
    xs.dedup();
    xs
}

fn timed<T>(
    doc: &mut ReportDocument,
    key: &str,
    f: impl FnOnce() -> Result<T, CliError>,
) -> Result<T, CliError> {
    let start = Instant::now();
    let value = f()?;
    doc.timing(key, start.elapsed().as_millis());
    Ok(value)
}

/// The full battery: structural data first, then the numeric invariants
/// collected into an [`InvariantReport`], with per-entry provenance and
/// timings.
fn run_report(cli: &Cli, spec: SemigroupSpec, monoid: Monoid) -> Result<ReportDocument, CliError> {
    use factorinv::invariants::{InvariantReport, ReportValue};

    let mut doc = ReportDocument::new(Some(spec), cli.timings);
    let mut inv = InvariantReport::new();
    match &monoid {
        Monoid::Numerical(s) => {
            doc.push("generators", render_u64_set(s.generators()));
            let betti = timed(&mut doc, "betti", || Ok(s.betti_elements()))?;
            doc.note("betti", "Apéry candidate path");
            doc.push("betti", render_u64_set(&betti));
            let presentation = timed(&mut doc, "presentation", || Ok(s.minimal_presentation()))?;
            doc.push("presentation", render_pairs(&presentation));

            inv.insert("frobenius", ReportValue::Integer(BigInt::from(s.frobenius())));
            let a = s.as_affine();
            let rho = timed(&mut doc, "elasticity", || Ok(invariants::elasticity(&a)?))?;
            inv.insert("elasticity", ReportValue::Rational(rho));
            inv.note("elasticity", "circuits of the kernel congruence");
            let hf = timed(&mut doc, "half_factorial", || {
                Ok(invariants::is_half_factorial(&a)?)
            })?;
            inv.insert("half_factorial", ReportValue::Boolean(hf));
            if let Some(min) = invariants::delta_min_numerical(s) {
                inv.insert("delta_min", ReportValue::Integer(BigInt::from(min)));
            }
            if let Some(max) = invariants::delta_max_numerical(s) {
                inv.insert("delta_max", ReportValue::Integer(BigInt::from(max)));
            }
            if let Some(bound) = cli.bound {
                let scan = timed(&mut doc, "delta", || {
                    Ok(invariants::delta_set_numerical(s, bound, cli.periodicity_bound)?)
                })?;
                inv.note(
                    "delta",
                    format!("scan up to {bound}; complete: {}", scan.complete),
                );
                inv.insert(
                    "delta",
                    ReportValue::IntegerSet(scan.deltas.iter().map(|&d| BigInt::from(d)).collect()),
                );
            }
            let c = timed(&mut doc, "catenary", || {
                Ok(invariants::catenary_numerical(s)?)
            })?;
            inv.insert("catenary", ReportValue::Integer(c));
            inv.note("catenary", "Apéry candidate path");
            let eq = timed(&mut doc, "equal_catenary", || {
                Ok(invariants::equal_catenary(&a)?)
            })?;
            inv.insert("equal_catenary", ReportValue::Integer(eq));
            let hom = timed(&mut doc, "homogeneous_catenary", || {
                Ok(invariants::homogeneous_catenary(&a)?)
            })?;
            inv.insert("homogeneous_catenary", ReportValue::Integer(hom));
            let mono = timed(&mut doc, "monotone_catenary", || {
                Ok(invariants::monotone_catenary_numerical(s)?)
            })?;
            inv.insert("monotone_catenary", ReportValue::Integer(mono));
            let t = timed(&mut doc, "tame", || Ok(invariants::tame_numerical(s)?))?;
            inv.insert("tame", ReportValue::Integer(t));
            inv.note("tame", "Apéry candidate path");
            let w = timed(&mut doc, "omega", || Ok(invariants::omega_numerical(s)?))?;
            inv.insert("omega", ReportValue::Integer(w));
            inv.note("omega", "Apéry shortcut");
            let md = timed(&mut doc, "max_denumerant", || {
                Ok(invariants::max_denumerant(s, cli.bound)?)
            })?;
            inv.insert(
                "max_denumerant",
                ReportValue::Integer(BigInt::from(md.value)),
            );
            inv.note(
                "max_denumerant",
                format!(
                    "scanned up to {} ({})",
                    md.bound_used,
                    if md.bound_supplied {
                        "caller-supplied bound"
                    } else {
                        "heuristic default bound; exact only if confirmed"
                    }
                ),
            );
        }
        Monoid::Affine(a) => {
            doc.push("generators", render_vector_set(a.minimal_generators()?));
            let betti = timed(&mut doc, "betti", || Ok(a.betti_elements()?.to_vec()))?;
            doc.note("betti", "Graver candidate path");
            doc.push("betti", render_vector_set(&betti));
            let presentation =
                timed(&mut doc, "presentation", || Ok(a.minimal_presentation()?))?;
            doc.push("presentation", render_pairs(&presentation));

            let rho = timed(&mut doc, "elasticity", || Ok(invariants::elasticity(a)?))?;
            inv.insert("elasticity", ReportValue::Rational(rho));
            inv.note("elasticity", "circuits of the kernel congruence");
            let hf = timed(&mut doc, "half_factorial", || {
                Ok(invariants::is_half_factorial(a)?)
            })?;
            inv.insert("half_factorial", ReportValue::Boolean(hf));
            if let Some(min) = timed(&mut doc, "delta_min", || Ok(invariants::delta_min(a)?))? {
                inv.insert("delta_min", ReportValue::Integer(min));
            }
            if let Some(max) = timed(&mut doc, "delta_max", || Ok(invariants::delta_max(a)?))? {
                inv.insert("delta_max", ReportValue::Integer(max));
            }
            let c = timed(&mut doc, "catenary", || Ok(invariants::catenary(a)?))?;
            inv.insert("catenary", ReportValue::Integer(c));
            inv.note("catenary", "maximum over Betti elements");
            let eq = timed(&mut doc, "equal_catenary", || {
                Ok(invariants::equal_catenary(a)?)
            })?;
            inv.insert("equal_catenary", ReportValue::Integer(eq));
            let hom = timed(&mut doc, "homogeneous_catenary", || {
                Ok(invariants::homogeneous_catenary(a)?)
            })?;
            inv.insert("homogeneous_catenary", ReportValue::Integer(hom));
            let mono = timed(&mut doc, "monotone_catenary", || {
                Ok(invariants::monotone_catenary(a)?)
            })?;
            inv.insert("monotone_catenary", ReportValue::Integer(mono));
            let t = timed(&mut doc, "tame", || Ok(invariants::tame(a)?))?;
            inv.insert("tame", ReportValue::Integer(t));
            let w = timed(&mut doc, "omega", || Ok(invariants::omega(a)?))?;
            inv.insert("omega", ReportValue::Integer(w));
        }
    }
    for (key, value) in &inv.values {
        doc.push(key, render_report_value(value));
    }
    for (key, note) in &inv.notes {
        doc.note(key, note.clone());
    }
    Ok(doc)
}
