use num_bigint::BigInt;
use serde_json::{json, Value};

use latfield::characters::{jacobi_sum, make_character, CharValue};
use latfield::curves::{self, CountResult, CurveSpec, WeilZero};
use latfield::field::{FiniteRing, PrimeField};
use latfield::frobenius::{self, FrobeniusData, GaloisContext};
use latfield::poly_field::all_isomorphisms;
use latfield::splitting::splitting_data;
use latfield::verify::{self, VerifyConfig};
use latfield::zeta::{self, render_integer_poly};
use latfield::{Error, LatticeField, PolyField, PolyOverFp, QuadraticInteger, Result, RingTag};

use crate::output::{big, element, table, Report};
use crate::{Cli, Command, CountArgs, CurveArgs, Family, FieldArgs, FrobeniusCommand, Method, TableKind, ZetaArgs};

/// Operation tables are printed for fields of at most this size.
const TABLE_LIMIT: u64 = 100;

/// Point lists are printed for fields of at most this size.
const POINT_LIMIT: u64 = 200;

pub fn run(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Factor { ring, p } => factor(cli, *ring, *p),
        Command::Field(args) => field(cli, args),
        Command::Count(args) => count(cli, args),
        Command::Zeta(args) => zeta_cmd(cli, args),
        Command::Frobenius(sub) => frobenius_cmd(sub),
        Command::Character { p, m, at } => character(cli, *p, *m, *at),
        Command::Jacobi { p, m1, m2 } => jacobi(cli, *p, *m1, *m2),
        Command::Verify {
            samples,
            prime_bound,
            lift_bound,
        } => verify_cmd(cli, *samples, *prime_bound, *lift_bound),
    }
}

fn require_within(what: &'static str, size: u64, bound: u64) -> Result<()> {
    if size > bound {
        return Err(Error::BoundExceeded {
            what,
            size: size.to_string(),
            bound,
        });
    }
    Ok(())
}

fn factor(cli: &Cli, ring: RingTag, p: u64) -> Result<Report> {
    let data = splitting_data(ring, p)?;
    let unit = data.unit()?;
    let mut factors = String::new();
    for (q, k) in &data.primes_above {
        factors.push_str(&format!("({})", q.render(cli.unicode)));
        if *k > 1 {
            factors.push_str(&format!("^{k}"));
        }
    }
    let prefix = if unit.is_one() { String::new() } else { unit.render_unit(cli.unicode) };
    let text = format!(
        "{p} = {prefix}{factors}  [{}, e={} f={} g={}]",
        data.class, data.e, data.f, data.g
    );
    let result = json!({
        "ring": ring.name(),
        "p": p,
        "class": data.class.name(),
        "e": data.e,
        "f": data.f,
        "g": data.g,
        "unit": element(&unit),
        "primes": data.primes_above.iter().map(|(q, k)| json!({"prime": element(q), "exponent": k})).collect::<Vec<_>>(),
    });
    Ok(Report::new("factor", json!({"ring": ring.name(), "p": p}), result, text))
}

fn op_table<K: FiniteRing>(k: &K, kind: TableKind, show: impl Fn(&K::Elem) -> String) -> Result<(String, Value)> {
    require_within("operation table", k.order(), TABLE_LIMIT)?;
    let elems = k.elements()?;
    let sym = match kind {
        TableKind::Add => "+",
        TableKind::Mul => "*",
    };
    let cells: Vec<Vec<String>> = elems
        .iter()
        .map(|x| {
            elems
                .iter()
                .map(|y| {
                    show(&match kind {
                        TableKind::Add => k.add(x, y),
                        TableKind::Mul => k.mul(x, y),
                    })
                })
                .collect()
        })
        .collect();
    let header: Vec<String> = std::iter::once(sym.to_string()).chain(elems.iter().map(&show)).collect();
    let rows: Vec<Vec<String>> = elems
        .iter()
        .zip(&cells)
        .map(|(x, row)| std::iter::once(show(x)).chain(row.iter().cloned()).collect())
        .collect();
    Ok((table(&header, &rows), json!(cells)))
}

fn field(cli: &Cli, args: &FieldArgs) -> Result<Report> {
    let inputs = json!({
        "ring": args.ring,
        "modulus": args.modulus,
        "p": args.p,
        "table": args.table.map(|t| format!("{t:?}").to_lowercase()),
        "lattice": args.lattice,
        "iso": args.iso,
    });
    if args.ring.eq_ignore_ascii_case("poly") {
        let p = args
            .p
            .ok_or_else(|| Error::Domain("a polynomial modulus needs -p".into()))?;
        let f = PolyOverFp::parse(p, &args.modulus)?;
        let k = PolyField::new(&f)?;
        require_within("field enumeration", k.order(), cli.bound)?;
        let show = |x: &latfield::PolyFieldElement| x.render(cli.unicode);
        let elems = k.elements()?;
        let mut text = format!("F_{p}[x]/({}): {} elements\n", f.render("x"), k.order());
        text.push_str(&elems.iter().map(show).collect::<Vec<_>>().join(" "));
        let mut result = json!({
            "kind": "polynomial",
            "p": p,
            "modulus": f.integer_coeffs(),
            "order": k.order(),
            "elements": elems.iter().map(|x| x.rep().integer_coeffs()).collect::<Vec<_>>(),
        });
        if let Some(kind) = args.table {
            let (t, v) = op_table(&k, kind, show)?;
            text.push_str("\n\n");
            text.push_str(&t);
            result["table"] = v;
        }
        return Ok(Report::new("field", inputs, result, text));
    }

    let ring: RingTag = args.ring.parse()?;
    let modulus = QuadraticInteger::parse(ring, &args.modulus)?;
    let k = LatticeField::new(&modulus)?;
    require_within("field enumeration", k.order(), cli.bound)?;
    let show = |x: &latfield::LatticeFieldElement| x.rep().render(cli.unicode);
    let elems = k.enumerate()?;
    let mut text = format!(
        "Z[{}]/({}): {} elements (p={}, f={})\n",
        ring.symbol(cli.unicode),
        modulus.render(cli.unicode),
        k.order(),
        k.p(),
        k.f()
    );
    text.push_str(&elems.iter().map(show).collect::<Vec<_>>().join(" "));
    let mut result = json!({
        "kind": "lattice",
        "ring": ring.name(),
        "modulus": element(&modulus),
        "p": k.p(),
        "f": k.f(),
        "order": k.order(),
        "elements": elems.iter().map(|x| element(x.rep())).collect::<Vec<_>>(),
    });
    if let Some(kind) = args.table {
        let (t, v) = op_table(&k, kind, show)?;
        text.push_str("\n\n");
        text.push_str(&t);
        result["table"] = v;
    }
    if args.lattice {
        let domain = k.fundamental_domain()?;
        let rows: Vec<Vec<String>> = domain
            .iter()
            .map(|(z, r)| vec![z.render(cli.unicode), show(r)])
            .collect();
        text.push_str("\n\n");
        text.push_str(&table(&["lattice point".into(), "residue".into()], &rows));
        result["lattice"] = json!(domain
            .iter()
            .map(|(z, r)| json!({"point": element(z), "residue": element(r.rep())}))
            .collect::<Vec<_>>());
    }
    if let Some(poly) = &args.iso {
        let f = PolyOverFp::parse(k.p(), poly)?;
        let target = PolyField::new(&f)?;
        let isos = all_isomorphisms(&k, &target)?;
        text.push_str(&format!(
            "\n\n{} isomorphisms onto F_{}[x]/({})",
            isos.len(),
            k.p(),
            f.render("x")
        ));
        for iso in &isos {
            text.push_str(&format!("\n  {} -> {}", ring.symbol(cli.unicode), iso.root.render(cli.unicode)));
        }
        result["isomorphisms"] = json!(isos
            .iter()
            .map(|iso| json!({
                "xi_image": iso.root.rep().integer_coeffs(),
                "table": iso.table.iter().map(|(a, b)| json!([element(a.rep()), b.rep().integer_coeffs()])).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>());
    }
    Ok(Report::new("field", inputs, result, text))
}

fn curve_of(args: &CurveArgs) -> Result<CurveSpec> {
    match args.family {
        Family::Cubic => Ok(CurveSpec::cubic(args.d)),
        Family::Quartic => Ok(CurveSpec::quartic()),
        Family::Superelliptic => CurveSpec::superelliptic(args.degree, args.d),
    }
}

fn curve_inputs(args: &CurveArgs) -> Value {
    let mut v = json!({"family": format!("{:?}", args.family).to_lowercase(), "p": args.p});
    match args.family {
        Family::Cubic => v["D"] = json!(args.d),
        Family::Quartic => {}
        Family::Superelliptic => {
            v["D"] = json!(args.d);
            v["degree"] = json!(args.degree);
        }
    }
    v
}

fn count_json(c: &CountResult) -> Value {
    json!({"method": c.method.name(), "q": c.q, "affine": c.n_affine, "projective": c.n_projective})
}

fn count(cli: &Cli, args: &CountArgs) -> Result<Report> {
    let curve = curve_of(&args.curve)?;
    let p = args.curve.p;
    let fp = PrimeField::new(p)?;
    let mut inputs = curve_inputs(&args.curve);
    inputs["method"] = json!(format!("{:?}", args.method).to_lowercase());
    inputs["ext"] = json!(args.ext);
    inputs["points"] = json!(args.points);

    let genus_one = curve.has_projective_count();
    let methods: Vec<Method> = match args.method {
        Method::All if genus_one => vec![Method::Brute, Method::Char, Method::Closed],
        Method::All => vec![Method::Brute, Method::Char],
        m => vec![m],
    };
    let mut results = Vec::new();
    let mut points = None;
    for m in &methods {
        results.push(match m {
            Method::Brute => {
                require_within("brute-force count", p, cli.bound)?;
                let b = curves::count_points_bruteforce(&curve, &fp)?;
                points = b.points;
                b.result
            }
            Method::Char => curves::count_points_character_sum(&curve, p)?,
            Method::Closed => curves::count_points_closed_form(&curve, p)?,
            Method::All => unreachable!(),
        });
    }
    let agree = results.windows(2).all(|w| w[0].n_affine == w[1].n_affine);
    let n_affine = results[0].n_affine;

    let mut text = format!("{curve} over F_{p}\n");
    let rows: Vec<Vec<String>> = results
        .iter()
        .map(|c| {
            vec![
                c.method.name().to_string(),
                c.n_affine.to_string(),
                c.n_projective.map_or("-".into(), |n| n.to_string()),
            ]
        })
        .collect();
    text.push_str(&table(&["method".into(), "affine".into(), "projective".into()], &rows));
    let mut result = json!({
        "curve": curve.to_string(),
        "genus": curve.genus,
        "p": p,
        "counts": results.iter().map(count_json).collect::<Vec<_>>(),
        "agree": agree,
    });
    if genus_one {
        let a_p = p as i64 - n_affine as i64;
        text.push_str(&format!("\na_p = {a_p}"));
        result["a_p"] = json!(a_p);
    }
    if results.len() > 1 {
        text.push_str(if agree { "\nmethods agree" } else { "\nMETHODS DISAGREE" });
    }
    if args.points {
        require_within("point list", p, POINT_LIMIT)?;
        let pts = match points {
            Some(pts) => pts,
            None => curves::count_points_bruteforce(&curve, &fp)?.points.unwrap_or_default(),
        };
        let rendered: Vec<String> = pts.iter().map(|(x, y)| format!("({x},{y})")).collect();
        text.push_str(&format!("\npoints: {}", rendered.join(" ")));
        result["points"] = json!(pts.iter().map(|(x, y)| json!([x, y])).collect::<Vec<_>>());
    }
    if let Some(n) = args.ext.filter(|&n| n >= 2) {
        if !genus_one {
            return Err(Error::Unsupported("extension counts need a genus-1 family".into()));
        }
        let a_p = p as i64 - n_affine as i64;
        let zd = zeta::betti_polynomial(a_p, p)?;
        let recurrence = zeta::extension_counts(&zd, n)?[n as usize - 1].affine.clone();
        let q = (p as u128).checked_pow(n).filter(|&q| q <= u64::MAX as u128).map(|q| q as u64);
        let brute = match q {
            Some(q) if q <= cli.bound && n as usize <= latfield::poly_field::MAX_IRREDUCIBILITY_DEGREE => {
                let k = PolyField::new(&PolyOverFp::smallest_irreducible(p, n as usize)?)?;
                Some(BigInt::from(curves::count_points_bruteforce(&curve, &k)?.result.n_affine))
            }
            _ => None,
        };
        let equal = brute.as_ref().map(|b| *b == recurrence);
        text.push_str(&format!("\nN_{n} affine over F_{p}^{n}: recurrence {recurrence}"));
        match (&brute, equal) {
            (Some(b), Some(true)) => text.push_str(&format!(", brute force {b} (equal)")),
            (Some(b), _) => text.push_str(&format!(", brute force {b} (DIFFERENT)")),
            (None, _) => text.push_str(", brute force skipped (field too large)"),
        }
        result["extension"] = json!({
            "n": n,
            "recurrence": big(&recurrence),
            "brute": brute.as_ref().map(big),
            "equal": equal,
        });
    }
    let mut report = Report::new("count", inputs, result, text);
    if !agree {
        report.exit_code = 1;
    }
    Ok(report)
}

fn zeta_cmd(cli: &Cli, args: &ZetaArgs) -> Result<Report> {
    let curve = curve_of(&args.curve)?;
    let p = args.curve.p;
    let mut inputs = curve_inputs(&args.curve);
    inputs["n_max"] = json!(args.n_max);
    inputs["order"] = json!(args.order);
    let a_p = curves::defect(&curve, p)?;
    let mut zd = zeta::betti_polynomial(a_p, p)?;
    let zero = curves::weil_zero(&curve, p)?;
    if let WeilZero::Split { w, .. } = &zero {
        zd = zd.with_weil_pair(w.clone())?;
    }
    let counts = zeta::extension_counts(&zd, args.n_max)?;
    let hasse = zeta::hasse_check(&zd);
    let series = zeta::zeta_series_check(&zd, args.order)?;

    let zeros = match &zd.weil_pair {
        Some((w, _)) => format!("{}, conj", w.render(cli.unicode)),
        None => "purely imaginary pair, a_p = 0".into(),
    };
    let mut text = format!(
        "{curve} at p = {p}\nP(T) = {}; P(1)={}; zeros: {zeros}\n",
        zd.render('T'),
        zd.projective_count()
    );
    text.push_str(&format!("u-form: {}\n", render_integer_poly(&zd.u_form(), 'u')));
    text.push_str(&format!(
        "Hasse: a_p^2 = {} {} 4p = {}\n",
        hasse.a_p_squared,
        if hasse.bound_ok { "<=" } else { ">" },
        hasse.four_p
    ));
    let rows: Vec<Vec<String>> = counts
        .iter()
        .map(|c| vec![c.n.to_string(), c.s_n.to_string(), c.affine.to_string(), c.projective.to_string()])
        .collect();
    text.push_str(&table(&["n".into(), "s_n".into(), "affine".into(), "projective".into()], &rows));
    text.push_str(&format!(
        "\nseries check to order {}: {}",
        args.order,
        if series { "pass" } else { "FAIL" }
    ));
    let result = json!({
        "p": p,
        "a_p": a_p,
        "P": zd.betti_coeffs,
        "u_form": zd.u_form(),
        "P_at_1": zd.projective_count(),
        "weil_zero": zd.weil_pair.as_ref().map(|(w, _)| element(w)),
        "weil_zero_conj": zd.weil_pair.as_ref().map(|(_, c)| element(c)),
        "counts": counts.iter().map(|c| json!({
            "n": c.n,
            "s_n": big(&c.s_n),
            "affine": big(&c.affine),
            "projective": big(&c.projective),
        })).collect::<Vec<_>>(),
        "hasse": {"bound_ok": hasse.bound_ok, "a_p_squared": hasse.a_p_squared as u64, "four_p": hasse.four_p as u64},
        "series_check": {"order": args.order, "pass": series},
    });
    let mut report = Report::new("zeta", inputs, result, text);
    if !series {
        report.exit_code = 1;
    }
    Ok(report)
}

fn frobenius_text(data: &FrobeniusData) -> String {
    let mut text = match data.context {
        GaloisContext::Cyclotomic(n) => format!("Frob_{} in {}: {} mod {n}", data.p, data.context, data.symbol),
        GaloisContext::QuadraticField(_) => format!("Frob_{} in {}: symbol {}", data.p, data.context, data.symbol),
    };
    if let Some(m) = data.matrix {
        text.push_str(&format!("\nmatrix: [[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]));
    }
    if let Some(t) = data.char_poly_t {
        text.push_str(&format!("\ndet(I - T M) = {}", render_integer_poly(&t, 'T')));
    }
    if let Some(u) = data.char_poly_u {
        text.push_str(&format!("\ndet(u I - M) = {}", render_integer_poly(&u, 'u')));
    }
    text
}

fn frobenius_json(data: &FrobeniusData) -> Value {
    json!({
        "context": data.context.to_string(),
        "p": data.p,
        "symbol": data.symbol,
        "matrix": data.matrix,
        "char_poly_T": data.char_poly_t,
        "char_poly_u": data.char_poly_u,
    })
}

fn frobenius_cmd(sub: &FrobeniusCommand) -> Result<Report> {
    let (inputs, data, extra) = match *sub {
        FrobeniusCommand::Quadratic { d, p } => (
            json!({"context": "quadratic", "d": d, "p": p}),
            frobenius::frobenius_quadratic(d, p)?,
            None,
        ),
        FrobeniusCommand::Ring { ring, p } => {
            let data = frobenius::frobenius_matrix_and_charpoly(ring, p)?;
            let xi = QuadraticInteger::xi(ring);
            let image = frobenius::frobenius_lift_apply(ring, p, &xi)?;
            (
                json!({"context": "ring", "ring": ring.name(), "p": p}),
                data,
                Some((xi, image)),
            )
        }
        FrobeniusCommand::Cyclotomic { n, p } => (
            json!({"context": "cyclotomic", "n": n, "p": p}),
            frobenius::frobenius_cyclotomic(n, p)?,
            None,
        ),
    };
    let mut text = frobenius_text(&data);
    let mut result = frobenius_json(&data);
    if let Some((xi, image)) = extra {
        text.push_str(&format!("\nlift: {} -> {}", xi.render(false), image.render(false)));
        result["xi_image"] = element(&image);
    }
    Ok(Report::new("frobenius", inputs, result, text))
}

fn value_json(v: &CharValue) -> Value {
    match v {
        CharValue::Int(n) => json!(n),
        CharValue::Ring(z) => element(z),
    }
}

fn character(cli: &Cli, p: u64, m: u32, at: Option<i64>) -> Result<Report> {
    let chi = make_character(p, m)?;
    let inputs = json!({"p": p, "m": m, "at": at});
    let mut result = json!({
        "p": p,
        "m": m,
        "value_ring": chi.value_ring().name(),
        "pi": chi.pi().map(element),
    });
    let text = match at {
        Some(a) => {
            let v = chi.eval(a);
            result["at"] = json!(a);
            result["value"] = value_json(v);
            result["rendered"] = json!(v.render(cli.unicode));
            v.render(cli.unicode)
        }
        None => {
            let table_rows: Vec<Vec<String>> = chi
                .character_table()
                .iter()
                .map(|(a, v)| vec![a.to_string(), v.render(cli.unicode)])
                .collect();
            result["table"] = json!(chi
                .character_table()
                .iter()
                .map(|(_, v)| value_json(v))
                .collect::<Vec<_>>());
            let head = match chi.pi() {
                Some(pi) => format!("chi_{m} mod {p}, normalized at {}\n", pi.render(cli.unicode)),
                None => format!("chi_{m} mod {p}\n"),
            };
            head + &table(&["a".into(), "chi(a)".into()], &table_rows)
        }
    };
    Ok(Report::new("character", inputs, result, text))
}

fn jacobi(cli: &Cli, p: u64, m1: u32, m2: u32) -> Result<Report> {
    let chi = make_character(p, m1)?;
    let psi = make_character(p, m2)?;
    let j = jacobi_sum(&chi, &psi)?;
    let norm = j.value.norm();
    let text = format!("{} (norm {norm})", j.value.render(cli.unicode));
    let result = json!({"value": element(&j.value), "norm": big(&norm)});
    Ok(Report::new("jacobi", json!({"p": p, "m1": m1, "m2": m2}), result, text))
}

fn verify_cmd(cli: &Cli, samples: usize, prime_bound: u64, lift_bound: u64) -> Result<Report> {
    let cfg = VerifyConfig {
        seed: cli.seed,
        samples,
        prime_bound,
        lift_bound,
    };
    let outcomes = verify::run_all(&cfg)?;
    let rows: Vec<Vec<String>> = outcomes
        .iter()
        .map(|o| {
            vec![
                if o.passed { "PASS" } else { "FAIL" }.to_string(),
                o.name.to_string(),
                format!("{} cases", o.cases),
                o.failure.clone().unwrap_or_default(),
            ]
        })
        .collect();
    let text = table(&["status".into(), "suite".into(), "cases".into(), "first failure".into()], &rows);
    let all = outcomes.iter().all(|o| o.passed);
    let result = json!({
        "passed": all,
        "suites": outcomes.iter().map(|o| json!({
            "name": o.name,
            "passed": o.passed,
            "cases": o.cases,
            "failure": o.failure,
        })).collect::<Vec<_>>(),
    });
    let inputs = json!({"seed": cli.seed, "samples": samples, "prime_bound": prime_bound, "lift_bound": lift_bound});
    let mut report = Report::new("verify", inputs, result, text);
    if !all {
        report.exit_code = 1;
    }
    Ok(report)
}
