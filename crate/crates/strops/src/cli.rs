//! Command-line front end: space registry, dispatch, deterministic table
//! and JSON emission.
//!
//! Exit codes: 0 on success, 2 on domain errors, 64 on parse failures.
//! Output is byte-identical across runs for identical inputs.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::graded_algebra::{Coefficients, Ring, RingPresentationJson};
use crate::manifold_catalog::{
    cpn, fiber_monoid, grassmannian2, rpn, sphere, two_circles, FiberKind, ManifoldData,
    PontrjaginRing,
};
use crate::pro_tower::{o2_comparison, s1_tower, tower_limit, Tower};
use crate::qops::{q_op, QContext};
use crate::steenrod::{twisted_sq, SqAction};
use crate::string_product::{
    cjy_e2_page, intersection_ring, string_ring, verify_structure_homs, FiberwiseMonoidModel,
};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "strops",
    about = "Exact string-topology computations: intersection rings, string products, \
             twisted Steenrod actions, homology operations, and classifying-space towers",
    disable_help_subcommand = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RingKind {
    Cohomology,
    Intersection,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TowerGroup {
    S1,
    O2,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the cohomology or shifted intersection ring of a space
    Ring {
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value_t = RingKind::Cohomology)]
        kind: RingKind,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Apply a Steenrod square (optionally twisted by the negated tangent
    /// bundle) to a mod-2 cohomology class
    Sq {
        #[arg(long)]
        space: String,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        class: String,
        #[arg(long, default_value_t = false)]
        twisted: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// String ring of a trivial fiberwise monoid over a catalog base
    StringRing {
        #[arg(long)]
        base: String,
        #[arg(long)]
        fiber: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-8:2")]
        window: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Second-quadrant second-page algebra of a fiberwise monoid
    E2 {
        #[arg(long)]
        base: String,
        #[arg(long)]
        fiber: String,
        #[arg(long, default_value_t = 8)]
        tmax: i64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Towers over the classifying-space filtrations
    Tower {
        #[arg(long, value_enum)]
        group: TowerGroup,
        #[arg(long)]
        levels: u32,
        #[arg(long, default_value_t = false)]
        limit: bool,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Homology operation on a shifted class, entered as PD(<class>)
    Qop {
        #[arg(long)]
        space: String,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        class: String,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Check the structural ring maps of a trivial fiberwise monoid
    Verify {
        #[arg(long)]
        base: String,
        #[arg(long)]
        fiber: String,
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<W: Write>(args: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // help and version requests are successes, not usage errors
            use clap::error::ErrorKind;
            let kind = e.kind();
            let text = e.to_string();
            if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{text}");
                return EXIT_OK;
            }
            eprint!("{text}");
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_DOMAIN
        }
    }
}

fn parse_space(id: &str) -> Result<ManifoldData, Error> {
    parse_space_over(id, None)
}

/// Resolve a space identifier; `force_f2` asks for the mod-2 model of the
/// integral families.
fn parse_space_over(id: &str, coeffs: Option<Coefficients>) -> Result<ManifoldData, Error> {
    let f2 = Coefficients::prime_field(2)?;
    let natural_or = |c: Option<Coefficients>| c.unwrap_or(Coefficients::Integers);
    if let Some(rest) = id.strip_prefix("gr2,") {
        let n: u32 = rest
            .parse()
            .map_err(|_| Error::UnknownSpace(id.to_string()))?;
        return grassmannian2(n);
    }
    if id == "o2" {
        return two_circles();
    }
    if let Some(rest) = id.strip_prefix("cp") {
        let n: u32 = rest
            .parse()
            .map_err(|_| Error::UnknownSpace(id.to_string()))?;
        return cpn(n, natural_or(coeffs));
    }
    if let Some(rest) = id.strip_prefix("rp") {
        let n: u32 = rest
            .parse()
            .map_err(|_| Error::UnknownSpace(id.to_string()))?;
        return rpn(n);
    }
    if let Some(rest) = id.strip_prefix('s') {
        let n: u32 = rest
            .parse()
            .map_err(|_| Error::UnknownSpace(id.to_string()))?;
        return sphere(n, natural_or(coeffs));
    }
    let _ = f2;
    Err(Error::UnknownSpace(id.to_string()))
}

fn parse_fiber(id: &str, coeffs: Coefficients) -> Result<PontrjaginRing, Error> {
    if id == "s1" {
        return fiber_monoid(&FiberKind::Circle, coeffs);
    }
    if id == "o2" {
        return fiber_monoid(&FiberKind::O2, coeffs);
    }
    if id == "point" {
        return fiber_monoid(&FiberKind::Point, coeffs);
    }
    if let Some(rest) = id.strip_prefix("omega_s") {
        let (n, t) = rest
            .split_once(':')
            .ok_or_else(|| Error::UnknownSpace(id.to_string()))?;
        let n: u32 = n.parse().map_err(|_| Error::UnknownSpace(id.to_string()))?;
        let t: u32 = t.parse().map_err(|_| Error::UnknownSpace(id.to_string()))?;
        return fiber_monoid(&FiberKind::OmegaSphere { n, truncation: Some(t) }, coeffs);
    }
    Err(Error::UnknownSpace(id.to_string()))
}

fn parse_window(s: &str) -> Result<(i64, i64), Error> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| Error::InvalidParameter(format!("window {s:?} is not of the form a:b")))?;
    let lo: i64 = a
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad window bound {a:?}")))?;
    let hi: i64 = b
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("bad window bound {b:?}")))?;
    if lo > hi {
        return Err(Error::InvalidParameter("window is empty".into()));
    }
    Ok((lo, hi))
}

#[derive(Serialize)]
struct DegreeRow {
    degree: i64,
    unshifted_degree: i64,
    dim: usize,
    basis: Vec<String>,
}

#[derive(Serialize)]
struct RingDoc {
    space: String,
    kind: String,
    presentation: RingPresentationJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    manifold: Option<crate::manifold_catalog::ManifoldJson>,
    entries: Vec<DegreeRow>,
}

fn basis_rows(ring: &Ring, range: impl Iterator<Item = i64>, shift: i64) -> Result<Vec<DegreeRow>, Error> {
    let mut rows = Vec::new();
    for d in range {
        let basis = ring.basis_in_degree(d)?;
        rows.push(DegreeRow {
            degree: d,
            unshifted_degree: d + shift,
            dim: basis.len(),
            basis: basis
                .iter()
                .map(|m| ring.print(&ring.monomial_elem(m.clone())))
                .collect(),
        });
    }
    Ok(rows)
}

fn emit_ring_doc<W: Write>(out: &mut W, doc: &RingDoc, format: Format) -> Result<(), Error> {
    match format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(doc).expect("serializable"))
                .map_err(io_err)?;
        }
        Format::Table => {
            writeln!(out, "{} ({})", doc.space, doc.kind).map_err(io_err)?;
            let p = &doc.presentation;
            let gens: Vec<String> = p
                .generators
                .iter()
                .map(|g| format!("{}:{}", g.name, g.degree))
                .collect();
            writeln!(
                out,
                "presentation: [{}] / ({})",
                gens.join(", "),
                p.relations.join(", ")
            )
            .map_err(io_err)?;
            for row in &doc.entries {
                if row.dim == 0 {
                    continue;
                }
                let tag = if doc.kind == "cohomology" {
                    format!("H^{}", row.degree)
                } else {
                    format!("H[{:+}]", row.degree)
                };
                writeln!(out, "{tag}: {}", row.basis.join(", ")).map_err(io_err)?;
            }
        }
    }
    Ok(())
}

fn io_err(e: std::io::Error) -> Error {
    Error::Domain(format!("io error: {e}"))
}

fn dispatch<W: Write>(cmd: &Command, out: &mut W) -> Result<i32, Error> {
    match cmd {
        Command::Ring { space, kind, format } => {
            let m = parse_space(space)?;
            match kind {
                RingKind::Cohomology => {
                    let doc = RingDoc {
                        space: m.name.clone(),
                        kind: "cohomology".into(),
                        presentation: m.cohomology.to_json(),
                        manifold: (*format == Format::Json).then(|| m.to_json()).transpose()?,
                        entries: basis_rows(&m.cohomology, 0..=m.dim, 0)?,
                    };
                    emit_ring_doc(out, &doc, *format)?;
                }
                RingKind::Intersection => {
                    let ir = intersection_ring(&m)?;
                    let doc = RingDoc {
                        space: m.name.clone(),
                        kind: "intersection".into(),
                        presentation: ir.ring.to_json(),
                        manifold: None,
                        entries: basis_rows(&ir.ring, -m.dim..=0, m.dim)?,
                    };
                    emit_ring_doc(out, &doc, *format)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Sq { space, i, class, twisted, format } => {
            let f2 = Coefficients::prime_field(2)?;
            let m = parse_space_over(space, Some(f2))?;
            let action = SqAction::for_space(&m)?;
            let x = m.cohomology.parse(class)?;
            let result = if *twisted {
                let twist = crate::manifold_catalog::minus_tangent_twist(&m)?;
                twisted_sq(*i, &x, &twist, &action)?
            } else {
                action.sq(*i, &x)?
            };
            let op = if *twisted { format!("Sq^{i}_t") } else { format!("Sq^{i}") };
            match format {
                Format::Table => {
                    writeln!(out, "{op}({}) = {}", m.cohomology.print(&x), m.cohomology.print(&result))
                        .map_err(io_err)?;
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct SqDoc {
                        space: String,
                        op: String,
                        class: String,
                        result: String,
                        degree: Option<i64>,
                    }
                    let doc = SqDoc {
                        space: m.name.clone(),
                        op,
                        class: m.cohomology.print(&x),
                        result: m.cohomology.print(&result),
                        degree: result.degree(),
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
                        .map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::StringRing { base, fiber, window, format } => {
            let m = parse_space(base)?;
            let f = parse_fiber(fiber, m.cohomology.coefficients())?;
            let window = parse_window(window)?;
            let model = FiberwiseMonoidModel::trivial(m.clone(), f);
            let ring = string_ring(&model, window)?;
            let entries = basis_rows(&ring, window.0..=window.1, m.dim)?;
            let products = basis_products(&ring, window)?;
            emit_graded_with_products(
                out,
                *format,
                &format!("string ring of {} x {}", m.name, model.fiber.name),
                ring.to_json(),
                entries,
                products,
                None,
            )
        }
        Command::E2 { base, fiber, tmax, format } => {
            let m = parse_space(base)?;
            let f = parse_fiber(fiber, m.cohomology.coefficients())?;
            let page = cjy_e2_page(&m, &f, *tmax)?;
            #[derive(Serialize)]
            struct E2Entry {
                bidegree: (i64, i64),
                dim: usize,
                basis: Vec<String>,
            }
            #[derive(Serialize)]
            struct E2Doc {
                base: String,
                fiber: String,
                entries: Vec<E2Entry>,
                products: Vec<ProductRow>,
                certificate: Option<String>,
            }
            let label = |b: &(crate::graded_algebra::Monomial, crate::graded_algebra::Monomial)| {
                format!(
                    "{}(x){}",
                    m.cohomology.print(&m.cohomology.monomial_elem(b.0.clone())),
                    page.fiber.print(&page.fiber.monomial_elem(b.1.clone()))
                )
            };
            let mut entries = Vec::new();
            for (&bd, basis) in &page.entries {
                entries.push(E2Entry {
                    bidegree: bd,
                    dim: basis.len(),
                    basis: basis.iter().map(&label).collect(),
                });
            }
            let mut products = Vec::new();
            for (&bda, basis_a) in &page.entries {
                for a in basis_a {
                    for (&bdb, basis_b) in &page.entries {
                        for b in basis_b {
                            if (bda.0 + bdb.0).abs() > m.dim || bda.1 + bdb.1 > *tmax + m.dim {
                                continue;
                            }
                            let prod = page.product(a, b)?;
                            let result: Vec<String> = prod
                                .iter()
                                .map(|(k, c)| format!("{}*{}", c, label(k)))
                                .collect();
                            products.push(ProductRow {
                                a: label(a),
                                b: label(b),
                                result: if result.is_empty() {
                                    "0".into()
                                } else {
                                    result.join("+")
                                },
                            });
                        }
                    }
                }
            }
            let doc = E2Doc {
                base: m.name.clone(),
                fiber: f.name.clone(),
                entries,
                products,
                certificate: page.collapse_certificate.clone(),
            };
            match format {
                Format::Json => {
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
                        .map_err(io_err)?;
                }
                Format::Table => {
                    writeln!(out, "second page for {} with fiber {}", doc.base, doc.fiber)
                        .map_err(io_err)?;
                    for e in &doc.entries {
                        writeln!(
                            out,
                            "E2[{}, {}]: dim {}  {}",
                            e.bidegree.0,
                            e.bidegree.1,
                            e.dim,
                            e.basis.join(", ")
                        )
                        .map_err(io_err)?;
                    }
                    if let Some(c) = &doc.certificate {
                        writeln!(out, "collapse certificate: {c}").map_err(io_err)?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Tower { group, levels, limit, window, format } => match group {
            TowerGroup::S1 => {
                let tower = s1_tower(*levels)?;
                let limit_doc = if *limit {
                    let w = match window {
                        Some(s) => parse_window(s)?,
                        None => (-2 * i64::from(*levels), 1),
                    };
                    Some(tower_limit(&tower, w)?)
                } else {
                    None
                };
                emit_s1_tower(out, *format, &tower, limit_doc.as_ref())
            }
            TowerGroup::O2 => {
                let cert = o2_comparison(*levels)?;
                match format {
                    Format::Json => {
                        #[derive(Serialize)]
                        struct CertSummary<'a> {
                            invariant: &'a str,
                            witness_levels: &'a [u32],
                            inequivalent: bool,
                        }
                        #[derive(Serialize)]
                        struct O2Doc<'a> {
                            group: &'a str,
                            levels: &'a [crate::pro_tower::O2LevelReport],
                            certificate: CertSummary<'a>,
                        }
                        let doc = O2Doc {
                            group: "o2",
                            levels: &cert.levels,
                            certificate: CertSummary {
                                invariant: &cert.invariant,
                                witness_levels: &cert.witness_levels,
                                inequivalent: cert.inequivalent,
                            },
                        };
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string_pretty(&doc).expect("serializable")
                        )
                        .map_err(io_err)?;
                    }
                    Format::Table => {
                        writeln!(out, "towers over the 2-plane Grassmannian filtration")
                            .map_err(io_err)?;
                        for l in &cert.levels {
                            writeln!(
                                out,
                                "level {}: trivial side action {}, adjoint side action {}",
                                l.n,
                                if l.trivial_action_vanishes { "zero" } else { "nonzero" },
                                if l.adjoint_action_nonzero_on_every_nonzero_class {
                                    "faithful"
                                } else {
                                    "zero"
                                }
                            )
                            .map_err(io_err)?;
                        }
                        writeln!(
                            out,
                            "verdict: towers {} (invariant: {}; witnesses at levels {:?})",
                            if cert.inequivalent { "inequivalent" } else { "not separated" },
                            cert.invariant,
                            cert.witness_levels
                        )
                        .map_err(io_err)?;
                    }
                }
                Ok(EXIT_OK)
            }
        },
        Command::Qop { space, i, class, format } => {
            let f2 = Coefficients::prime_field(2)?;
            let m = parse_space_over(space, Some(f2))?;
            let ctx = QContext::for_space(&m)?;
            let inner = class
                .strip_prefix("PD(")
                .and_then(|s| s.strip_suffix(')'))
                .ok_or_else(|| {
                    Error::InvalidParameter(
                        "classes are entered as PD(<cohomology class>)".into(),
                    )
                })?;
            let xi = m.cohomology.parse(inner)?;
            let x = ctx.intersection.from_cohomology(&xi);
            let result = q_op(*i, &x, &ctx)?;
            let result_coh = ctx.intersection.to_cohomology(&result);
            match format {
                Format::Table => {
                    writeln!(
                        out,
                        "Q_{i}(PD({})) = PD({})  [shifted degree {}]",
                        m.cohomology.print(&xi),
                        m.cohomology.print(&result_coh),
                        result
                            .degree()
                            .map_or("none".to_string(), |d| format!("{d:+}")),
                    )
                    .map_err(io_err)?;
                }
                Format::Json => {
                    #[derive(Serialize)]
                    struct QopDoc {
                        space: String,
                        i: i64,
                        class: String,
                        result: String,
                        shifted_degree: Option<i64>,
                        unshifted_degree: Option<i64>,
                    }
                    let doc = QopDoc {
                        space: m.name.clone(),
                        i: *i,
                        class: format!("PD({})", m.cohomology.print(&xi)),
                        result: format!("PD({})", m.cohomology.print(&result_coh)),
                        shifted_degree: result.degree(),
                        unshifted_degree: result.degree().map(|d| d + m.dim),
                    };
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
                        .map_err(io_err)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { base, fiber, window } => {
            let m = parse_space(base)?;
            let f = parse_fiber(fiber, m.cohomology.coefficients())?;
            let model = FiberwiseMonoidModel::trivial(m.clone(), f);
            let w = match window {
                Some(s) => parse_window(s)?,
                None => (-m.dim, 1),
            };
            let report = verify_structure_homs(&model, w)?;
            writeln!(
                out,
                "projection to the base: {} ({} pairs)",
                if report.failures.iter().any(|f| f.starts_with("projection")) {
                    "FAIL"
                } else {
                    "PASS"
                },
                report.projection_pairs
            )
            .map_err(io_err)?;
            writeln!(
                out,
                "unit section: {} ({} pairs)",
                if report.failures.iter().any(|f| f.starts_with("section")) {
                    "FAIL"
                } else {
                    "PASS"
                },
                report.section_pairs
            )
            .map_err(io_err)?;
            writeln!(
                out,
                "fiber restriction: {} ({} pairs)",
                if report
                    .failures
                    .iter()
                    .any(|f| f.starts_with("fiber restriction"))
                {
                    "FAIL"
                } else {
                    "PASS"
                },
                report.fiber_restriction_pairs
            )
            .map_err(io_err)?;
            if report.all_pass() {
                Ok(EXIT_OK)
            } else {
                for f in &report.failures {
                    writeln!(out, "  {f}").map_err(io_err)?;
                }
                Ok(EXIT_DOMAIN)
            }
        }
    }
}

#[derive(Serialize)]
struct ProductRow {
    a: String,
    b: String,
    result: String,
}

fn basis_products(ring: &Ring, window: (i64, i64)) -> Result<Vec<ProductRow>, Error> {
    let mut basis = Vec::new();
    for d in window.0..=window.1 {
        basis.extend(ring.basis_in_degree(d)?);
    }
    let mut rows = Vec::new();
    for a in &basis {
        for b in &basis {
            let da = ring.monomial_degree(a);
            let db = ring.monomial_degree(b);
            if da + db < window.0 || da + db > window.1 {
                continue;
            }
            let ea = ring.monomial_elem(a.clone());
            let eb = ring.monomial_elem(b.clone());
            let prod = ea.mul(&eb)?;
            rows.push(ProductRow {
                a: ring.print(&ea),
                b: ring.print(&eb),
                result: ring.print(&prod),
            });
        }
    }
    Ok(rows)
}

#[derive(Serialize)]
struct GradedDoc {
    title: String,
    presentation: RingPresentationJson,
    entries: Vec<DegreeRow>,
    products: Vec<ProductRow>,
    certificate: Option<String>,
}

fn emit_graded_with_products<W: Write>(
    out: &mut W,
    format: Format,
    title: &str,
    presentation: RingPresentationJson,
    entries: Vec<DegreeRow>,
    products: Vec<ProductRow>,
    certificate: Option<String>,
) -> Result<i32, Error> {
    let doc = GradedDoc {
        title: title.to_string(),
        presentation,
        entries,
        products,
        certificate,
    };
    match format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
                .map_err(io_err)?;
        }
        Format::Table => {
            writeln!(out, "{}", doc.title).map_err(io_err)?;
            for row in &doc.entries {
                if row.dim == 0 {
                    continue;
                }
                writeln!(out, "H[{:+}]: {}", row.degree, row.basis.join(", ")).map_err(io_err)?;
            }
            if let Some(c) = &doc.certificate {
                writeln!(out, "certificate: {c}").map_err(io_err)?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn emit_s1_tower<W: Write>(
    out: &mut W,
    format: Format,
    tower: &Tower,
    limit: Option<&crate::pro_tower::TowerLimit>,
) -> Result<i32, Error> {
    #[derive(Serialize)]
    struct LevelDoc {
        n: u32,
        ring: RingPresentationJson,
    }
    #[derive(Serialize)]
    struct MapDoc {
        from: u32,
        to: u32,
        images: Vec<String>,
        iso_through: i64,
    }
    #[derive(Serialize)]
    struct LimitDoc {
        window: (i64, i64),
        basis: Vec<(i64, Vec<String>)>,
        stable_from: Vec<(i64, u32)>,
    }
    #[derive(Serialize)]
    struct TowerDoc {
        group: String,
        levels: Vec<LevelDoc>,
        maps: Vec<MapDoc>,
        limit: Option<LimitDoc>,
    }
    let mut levels = Vec::new();
    for l in &tower.levels {
        levels.push(LevelDoc {
            n: l.index,
            ring: l.ring.to_json(),
        });
    }
    let mut maps = Vec::new();
    for m in &tower.maps {
        let to_ring = &tower.levels[(m.to_index - 1) as usize].ring;
        let from_ring = &tower.levels[(m.from_index - 1) as usize].ring;
        let images: Vec<String> = from_ring
            .generators()
            .iter()
            .zip(&m.gen_images)
            .map(|(g, img)| format!("{} -> {}", g.name, to_ring.print(img)))
            .collect();
        maps.push(MapDoc {
            from: m.from_index,
            to: m.to_index,
            images,
            iso_through: m.iso_through,
        });
    }
    let limit_doc = limit.map(|l| LimitDoc {
        window: l.window,
        basis: l.basis.iter().map(|(d, b)| (*d, b.clone())).collect(),
        stable_from: l.stable_from.iter().map(|(d, n)| (*d, *n)).collect(),
    });
    let doc = TowerDoc {
        group: tower.name.clone(),
        levels,
        maps,
        limit: limit_doc,
    };
    match format {
        Format::Json => {
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("serializable"))
                .map_err(io_err)?;
        }
        Format::Table => {
            writeln!(out, "tower for the circle filtration").map_err(io_err)?;
            for l in &doc.levels {
                let gens: Vec<String> = l
                    .ring
                    .generators
                    .iter()
                    .map(|g| format!("{}:{}", g.name, g.degree))
                    .collect();
                writeln!(
                    out,
                    "level {}: [{}] / ({})",
                    l.n,
                    gens.join(", "),
                    l.ring.relations.join(", ")
                )
                .map_err(io_err)?;
            }
            for m in &doc.maps {
                writeln!(
                    out,
                    "map {} -> {}: {}  (isomorphism in degrees >= {})",
                    m.from,
                    m.to,
                    m.images.join(", "),
                    m.iso_through
                )
                .map_err(io_err)?;
            }
            if let Some(l) = &doc.limit {
                writeln!(out, "inverse limit in window {}:{}", l.window.0, l.window.1)
                    .map_err(io_err)?;
                for (d, basis) in &l.basis {
                    if basis.is_empty() {
                        continue;
                    }
                    writeln!(out, "H[{d:+}]: {}", basis.join(", ")).map_err(io_err)?;
                }
            }
        }
    }
    Ok(EXIT_OK)
}
