use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use priestley::phi::{FixedPointReport, ImageDecision};
use priestley::{
    clopen_downset_lattice, dimension_report, enumerate_posets, find_fixed_points, free_lattice_shift_check,
    in_image_of_phi, lemma51_iso, phi_lattice, phi_poset, prime_ideals, spec, verify_corollary, Bound, DistLattice,
    Error, FixedPointMode, IsoWitness, Limits, Poset,
};
use serde_json::{json, Value};

use crate::document::{Kind, PosetDocument};
use crate::dot::to_dot;
use crate::error::CliError;
use crate::report::{CommandEcho, ConfigSnapshot, RunReport};
use crate::{Command, Suite};

pub enum Rendered {
    Report(RunReport),
    Text(String),
}

type Dispatched = (Rendered, u8);

pub fn read_input(path: &Path) -> Result<PosetDocument, CliError> {
    let mut text = String::new();
    if path == Path::new("-") {
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|source| CliError::Read {
                path: path.to_path_buf(),
                source,
            })?;
    } else {
        text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
            path: path.to_path_buf(),
            source,
        })?;
    }
    PosetDocument::parse(&text)
}

fn load_lattice(doc: &PosetDocument) -> Result<DistLattice, CliError> {
    Ok(DistLattice::from_poset(doc.to_poset()?)?)
}

fn poset_id(p: &Poset) -> String {
    format!("{}-{}", p.size(), p.canonical_code())
}

/// Explicit element-to-element table.
fn iso_table(w: &IsoWitness, from: &Poset, to: &Poset) -> Value {
    w.forward
        .iter()
        .enumerate()
        .map(|(i, &j)| json!({ "from": i, "from_label": from.label(i), "to": j, "to_label": to.label(j) }))
        .collect()
}

fn labelled(p: &Poset, members: &[usize]) -> Value {
    members.iter().map(|&i| p.label(i)).collect()
}

struct Ctx<'a> {
    name: &'static str,
    args: BTreeMap<String, Value>,
    limits: &'a Limits,
}

impl Ctx<'_> {
    fn arg(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.args.insert(key.to_string(), value.into());
        self
    }

    fn report(self, verdict: impl Into<String>, result: Value, code: u8) -> Dispatched {
        let report = RunReport {
            command: CommandEcho {
                name: self.name.to_string(),
                args: self.args,
            },
            config: ConfigSnapshot::from(self.limits),
            verdict: verdict.into(),
            result,
            timing_ms: None,
        };
        (Rendered::Report(report), code)
    }
}

pub fn dispatch(command: &Command, limits: &Limits) -> Result<Dispatched, CliError> {
    let ctx = |name| Ctx {
        name,
        args: BTreeMap::new(),
        limits,
    };
    let path = |p: &Path| p.display().to_string();
    match command {
        Command::Check { input } => check(ctx("check").arg("input", path(input)), &read_input(input)?),
        Command::Phi { input, as_kind } => {
            let kind = match as_kind {
                Kind::Poset => "poset",
                Kind::Lattice => "lattice",
            };
            phi(
                ctx("phi").arg("input", path(input)).arg("as", kind),
                &read_input(input)?,
                *as_kind,
            )
        }
        Command::Primes { input } => primes(ctx("primes").arg("input", path(input)), &read_input(input)?),
        Command::Spec { input } => spectrum(ctx("spec").arg("input", path(input)), &read_input(input)?),
        Command::Downsets { input } => downsets(ctx("downsets").arg("input", path(input)), &read_input(input)?),
        Command::Image { input } => image(ctx("image").arg("input", path(input)), &read_input(input)?),
        Command::Experiments { suite, n_max } => {
            let n = n_max.unwrap_or(suite.default_n_max());
            let c = ctx("experiments").arg("suite", suite.name()).arg("n_max", n);
            match suite {
                Suite::Corollary => corollary_suite(c, n),
                Suite::Lemma51 => lemma51_suite(c, n),
                Suite::Fixedpoints => fixed_point_suite(c, n),
                Suite::Shift => shift_suite(c, n),
                Suite::Dimtable => dimtable(n, limits),
            }
        }
        Command::Dot { input, target } => {
            let p = read_input(input)?.to_poset()?;
            Ok((Rendered::Text(to_dot(&p, *target)), 0))
        }
    }
}

/// Error name and first counterexample for a failed validation.
fn describe(e: &Error) -> Option<(&'static str, Value)> {
    Some(match *e {
        Error::AntisymmetryViolation(a, b) => ("AntisymmetryViolation", json!([a, b])),
        Error::NotReflexive(a) => ("NotReflexive", json!([a])),
        Error::NotTransitive(a, b, c) => ("NotTransitive", json!([a, b, c])),
        Error::Unbounded(Bound::Bottom) => ("Unbounded", json!({ "missing": "bottom" })),
        Error::Unbounded(Bound::Top) => ("Unbounded", json!({ "missing": "top" })),
        Error::NotALattice { a, b, missing } => ("NotALattice", json!({ "pair": [a, b], "missing": missing })),
        Error::NotDistributive(a, b, c) => ("NotDistributive", json!([a, b, c])),
        Error::DegenerateBounds => ("DegenerateBounds", Value::Null),
        _ => return None,
    })
}

fn check(ctx: Ctx, doc: &PosetDocument) -> Result<Dispatched, CliError> {
    let validated = doc.to_poset().and_then(|p| match doc.kind {
        Kind::Poset => Ok(p.size()),
        Kind::Lattice => DistLattice::from_poset(p).map(|l| l.size()),
    });
    match validated {
        Ok(size) => {
            let verdict = match doc.kind {
                Kind::Poset => "valid poset",
                Kind::Lattice => "valid lattice",
            };
            Ok(ctx.report(verdict, json!({ "valid": true, "size": size }), 0))
        }
        Err(e) => match describe(&e) {
            Some((name, witness)) => Ok(ctx.report(
                name,
                json!({ "valid": false, "error": name, "witness": witness, "message": e.to_string() }),
                1,
            )),
            None => Err(e.into()),
        },
    }
}

fn phi(ctx: Ctx, doc: &PosetDocument, kind: Kind) -> Result<Dispatched, CliError> {
    let (order, pairs, out_doc) = match kind {
        Kind::Poset => {
            let (phi, map) = phi_poset(&doc.to_poset()?, ctx.limits)?;
            let d = PosetDocument::from_poset(&phi, Kind::Poset);
            (phi, map, d)
        }
        Kind::Lattice => {
            let (phi, map) = phi_lattice(&load_lattice(doc)?, ctx.limits)?;
            let d = PosetDocument::from_lattice(&phi);
            (phi.order().clone(), map, d)
        }
    };
    let result = json!({
        "size": order.size(),
        "pairs": pairs.pairs().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
        "document": out_doc,
    });
    Ok(ctx.report(format!("Φ has {} elements", order.size()), result, 0))
}

fn primes(ctx: Ctx, doc: &PosetDocument) -> Result<Dispatched, CliError> {
    let l = load_lattice(doc)?;
    let ideals = prime_ideals(&l, ctx.limits)?;
    let listed: Vec<Value> = ideals
        .iter()
        .map(|i| json!({ "members": i.members(), "labels": labelled(l.order(), &i.members()) }))
        .collect();
    let verdict = format!("{} prime ideals", ideals.len());
    Ok(ctx.report(verdict, json!({ "count": ideals.len(), "prime_ideals": listed }), 0))
}

fn spectrum(ctx: Ctx, doc: &PosetDocument) -> Result<Dispatched, CliError> {
    let l = load_lattice(doc)?;
    let s = spec(&l, ctx.limits)?;
    let ideals: Vec<Vec<usize>> = s.ideals.iter().map(|i| i.members()).collect();
    let result = json!({
        "size": s.size(),
        "ideals": ideals,
        "document": PosetDocument::from_poset(&s.order, Kind::Poset),
    });
    Ok(ctx.report(format!("spectrum has {} points", s.size()), result, 0))
}

fn downsets(ctx: Ctx, doc: &PosetDocument) -> Result<Dispatched, CliError> {
    let x = doc.to_poset()?;
    let e = clopen_downset_lattice(&x, ctx.limits)?;
    let sets: Vec<Vec<usize>> = e.sets.iter().map(|&m| priestley::members(m)).collect();
    let result = json!({
        "size": e.size(),
        "sets": sets,
        "document": PosetDocument::from_lattice(&e.lattice),
    });
    Ok(ctx.report(format!("{} down-sets", e.size()), result, 0))
}

fn image(ctx: Ctx, doc: &PosetDocument) -> Result<Dispatched, CliError> {
    let l = load_lattice(doc)?;
    match in_image_of_phi(&l, ctx.limits)? {
        ImageDecision::Yes(w) => {
            let result = json!({
                "in_image": true,
                "k": PosetDocument::from_lattice(&w.k),
                "spectrum_factor": {
                    "bottom_layer": w.factor.bottom_layer,
                    "matching": w.factor.matching,
                },
                "isomorphism": iso_table(&w.witness, w.phi_k.order(), l.order()),
            });
            Ok(ctx.report(format!("YES: K has {} elements", w.k.size()), result, 0))
        }
        ImageDecision::OddSpectrum(n) => Ok(ctx.report(
            format!("NO: spectrum size {n} is odd"),
            json!({ "in_image": false, "reason": "odd spectrum", "spectrum_size": n }),
            1,
        )),
        ImageDecision::NoFactorization(n) => Ok(ctx.report(
            format!("NO: spectrum of size {n} is not a product with the 2-chain"),
            json!({ "in_image": false, "reason": "no factorization", "spectrum_size": n }),
            1,
        )),
    }
}

fn all_posets(n_max: usize, limits: &Limits) -> Result<Vec<Poset>, CliError> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        out.extend(enumerate_posets(n, limits)?);
    }
    Ok(out)
}

fn corollary_suite(ctx: Ctx, n_max: usize) -> Result<Dispatched, CliError> {
    let mut rows = Vec::new();
    let mut failures = 0;
    for p in all_posets(n_max, ctx.limits)? {
        let id = poset_id(&p);
        let l = match DistLattice::from_poset(p) {
            Ok(l) => l,
            Err(e) if describe(&e).is_some() => continue,
            Err(e) => return Err(e.into()),
        };
        let o = verify_corollary(&l, ctx.limits)?;
        if !o.holds() {
            failures += 1;
        }
        rows.push(json!({
            "id": id,
            "lattice_size": o.lattice_size,
            "phi_size": o.phi_size,
            "prime_count": o.prime_count,
            "whole_second_projection": o.whole_second_projection,
            "holds": o.holds(),
            "counterexample": o.counterexample.as_ref().map(|c| format!("{c:?}")),
        }));
    }
    let verdict = if failures == 0 {
        format!("all {} instances pass", rows.len())
    } else {
        format!("{failures} of {} instances fail", rows.len())
    };
    Ok(ctx.report(verdict, json!({ "rows": rows }), u8::from(failures > 0)))
}

fn lemma51_suite(ctx: Ctx, n_max: usize) -> Result<Dispatched, CliError> {
    let mut spaces: Vec<(String, Poset)> = all_posets(n_max, ctx.limits)?
        .into_iter()
        .map(|p| (poset_id(&p), p))
        .collect();
    spaces.push(("cube3".to_string(), Poset::cube(3, ctx.limits)?));
    let mut rows = Vec::new();
    let mut failures = 0;
    for (id, x) in spaces {
        let iso = lemma51_iso(&x, ctx.limits)?;
        let valid = iso
            .witness
            .is_valid(iso.phi.order(), iso.product_downsets.lattice.order());
        if !valid {
            failures += 1;
        }
        rows.push(json!({
            "id": id,
            "x_size": x.size(),
            "downsets": iso.downsets.size(),
            "phi_size": iso.phi.size(),
            "product_downsets": iso.product_downsets.size(),
            "valid": valid,
            "forward": iso.witness.forward,
        }));
    }
    let verdict = if failures == 0 {
        format!("all {} instances pass", rows.len())
    } else {
        format!("{failures} of {} instances fail", rows.len())
    };
    Ok(ctx.report(verdict, json!({ "rows": rows }), u8::from(failures > 0)))
}

fn fixed_point_json(r: &FixedPointReport) -> Value {
    let hits: Vec<Value> = r
        .hits
        .iter()
        .map(|h| json!({ "id": h.id, "size": h.poset.size(), "witness": h.witness.forward }))
        .collect();
    json!({
        "mode": r.mode.name(),
        "scanned": r.scanned,
        "hits": hits,
        "expectation": r.expectation,
        "expectation_holds": r.expectation_holds,
    })
}

fn fixed_point_suite(ctx: Ctx, n_max: usize) -> Result<Dispatched, CliError> {
    let mut scans = Vec::new();
    let mut ok = true;
    for mode in [
        FixedPointMode::Posets,
        FixedPointMode::Lattices,
        FixedPointMode::ConnectedPosets,
    ] {
        let r = find_fixed_points(n_max, mode, ctx.limits)?;
        ok &= r.expectation_holds;
        scans.push(fixed_point_json(&r));
    }
    let verdict = if ok {
        "all expectations hold"
    } else {
        "an expectation fails"
    };
    Ok(ctx.report(verdict, json!({ "scans": scans }), u8::from(!ok)))
}

fn shift_suite(ctx: Ctx, n_max: usize) -> Result<Dispatched, CliError> {
    let mut rows = Vec::new();
    let mut ok = true;
    for n in 0..=n_max {
        let r = free_lattice_shift_check(n, ctx.limits)?;
        ok &= r.holds;
        rows.push(json!({
            "n": n,
            "lattice_size": r.lattice_size,
            "comparable_pairs": r.comparable_pairs,
            "target_size": r.target_size,
            "holds": r.holds,
            "witness": r.witness.forward,
        }));
    }
    let verdict = if ok { "pass" } else { "fail" };
    Ok(ctx.report(verdict, json!({ "rows": rows }), u8::from(!ok)))
}

fn dimtable(n_max: usize, limits: &Limits) -> Result<Dispatched, CliError> {
    let rows = dimension_report(n_max, limits)?;
    let mut w = csv::Writer::from_writer(Vec::new());
    let in_memory = "writing csv to memory";
    w.write_record(["id", "size", "phi_size", "dim", "dim_phi", "width", "width_phi"])
        .expect(in_memory);
    let cell = |d: Option<usize>| d.map_or("SKIPPED".to_string(), |d| d.to_string());
    for r in rows {
        w.write_record([
            r.id,
            r.size.to_string(),
            r.phi_size.to_string(),
            cell(r.dim),
            cell(r.dim_phi),
            r.width.to_string(),
            r.width_phi.to_string(),
        ])
        .expect(in_memory);
    }
    let bytes = w.into_inner().expect(in_memory);
    Ok((
        Rendered::Text(String::from_utf8(bytes).expect("csv of ASCII fields")),
        0,
    ))
}
