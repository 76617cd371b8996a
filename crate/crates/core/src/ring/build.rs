use super::{prime_power, FiniteRing, Monomial, RingSpec};
use crate::error::BuildError;
use crate::Limits;

/// Builds the ring described by `spec` under the default [`Limits`].
pub fn build_ring(spec: &RingSpec) -> Result<FiniteRing, BuildError> {
    build_ring_with(spec, &Limits::default())
}

/// Builds the ring described by `spec`. Axioms are verified exhaustively
/// when the order is at most `limits.axiom_check_order`; table-sourced
/// rings are always verified.
pub fn build_ring_with(spec: &RingSpec, limits: &Limits) -> Result<FiniteRing, BuildError> {
    spec.validate()?;
    let spec = spec.normalized();
    if let Some(order) = predicted_order(&spec) {
        if order > limits.order_cap as u64 {
            return Err(BuildError::OrderCap {
                order,
                cap: limits.order_cap,
            });
        }
    }
    let ring = build_unchecked(&spec)?;
    if ring.order > limits.order_cap {
        return Err(BuildError::OrderCap {
            order: ring.order as u64,
            cap: limits.order_cap,
        });
    }
    if ring.order <= limits.axiom_check_order {
        ring.check_axioms()?;
    }
    Ok(ring.with_spec(spec))
}

/// Order implied by the spec alone; `None` when a table must be read first
/// or the value overflows.
fn predicted_order(spec: &RingSpec) -> Option<u64> {
    match spec {
        RingSpec::Zmod { n } => Some(*n),
        RingSpec::Gf { p, k } => p.checked_pow(*k),
        RingSpec::MonAlg { q, vars, killed } => {
            let b = monomial_basis(vars.len(), killed).len() as u32;
            Some(q.checked_pow(b).unwrap_or(u64::MAX))
        }
        RingSpec::Product { factors } => factors
            .iter()
            .map(predicted_order)
            .try_fold(1u64, |acc, o| Some(acc.saturating_mul(o?))),
        RingSpec::Table { .. } => None,
    }
}

fn build_unchecked(spec: &RingSpec) -> Result<FiniteRing, BuildError> {
    Ok(match spec {
        RingSpec::Zmod { n } => zmod(*n as usize),
        RingSpec::Gf { p, k } => galois_field(*p as usize, *k as usize),
        RingSpec::MonAlg { q, vars, killed } => monomial_algebra(*q, vars, killed),
        RingSpec::Product { factors } => {
            let built = factors
                .iter()
                .map(build_unchecked)
                .collect::<Result<Vec<_>, _>>()?;
            direct_product(&built)
        }
        RingSpec::Table { source } => super::load_table_ring(source)?,
    })
}

fn raw(add: Vec<u32>, mul: Vec<u32>, labels: Vec<String>, desc: String) -> FiniteRing {
    FiniteRing::from_tables(add, mul, 0, 1, labels, desc, false)
        .expect("constructed tables are closed and have inverses")
}

fn zmod(n: usize) -> FiniteRing {
    let add = (0..n * n).map(|i| ((i / n + i % n) % n) as u32).collect();
    let mul = (0..n * n)
        .map(|i| ((i / n) as u64 * (i % n) as u64 % n as u64) as u32)
        .collect();
    let labels = (0..n).map(|i| i.to_string()).collect();
    raw(add, mul, labels, format!("Z {n}"))
}

/// Coefficients `c_0..c_{k-1}` of the lexicographically smallest monic
/// irreducible polynomial `x^k + c_{k-1} x^{k-1} + ... + c_0` over `F_p`,
/// comparing from the highest non-leading coefficient down.
pub(crate) fn smallest_irreducible(p: usize, k: usize) -> Vec<usize> {
    let count = p.pow(k as u32);
    (0..count)
        .map(|code| digits(code, p, k))
        .find(|low| {
            let mut f = low.clone();
            f.push(1);
            is_irreducible(&f, p)
        })
        .expect("irreducible polynomials exist in every degree")
}

fn digits(mut x: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % base;
        x /= base;
    }
    out
}

/// `f` is monic, coefficients low to high.
fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g = digits(code, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Remainder of `f` modulo the monic `g` over `F_p`.
fn poly_rem(f: &[usize], g: &[usize], p: usize) -> Vec<usize> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let lead = r.pop().unwrap();
        if lead != 0 {
            let shift = r.len() - dg;
            for (i, &gc) in g[..dg].iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - lead * gc % p) % p;
            }
        }
    }
    r
}

fn galois_field(p: usize, k: usize) -> FiniteRing {
    let n = p.pow(k as u32);
    let modulus = smallest_irreducible(p, k);
    let mut full = modulus.clone();
    full.push(1);
    let coeffs: Vec<Vec<usize>> = (0..n).map(|i| digits(i, p, k)).collect();
    let encode = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * p + d);
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let sum: Vec<usize> = coeffs[a].iter().zip(&coeffs[b]).map(|(x, y)| (x + y) % p).collect();
            add[a * n + b] = encode(&sum) as u32;
            let mut prod = vec![0; 2 * k - 1];
            for (i, &x) in coeffs[a].iter().enumerate() {
                for (j, &y) in coeffs[b].iter().enumerate() {
                    prod[i + j] = (prod[i + j] + x * y) % p;
                }
            }
            let rem = poly_rem(&prod, &full, p);
            mul[a * n + b] = encode(&rem) as u32;
        }
    }
    let labels = coeffs.iter().map(|c| field_label(c)).collect();
    raw(add, mul, labels, format!("GF {p} {k}"))
}

/// `2a^2+a+1` style label in the generator `a`.
fn field_label(coeffs: &[usize]) -> String {
    if coeffs.len() == 1 {
        return coeffs[0].to_string();
    }
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && deg > 0 { String::new() } else { c.to_string() };
        let var = match deg {
            0 => String::new(),
            1 => "a".to_string(),
            _ => format!("a^{deg}"),
        };
        terms.push(format!("{coef}{var}"));
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Monomials not divisible by any killed monomial, ordered by degree and then
/// with earlier variables first (`1, x, y, x^2, xy, ...`).
pub(crate) fn monomial_basis(nvars: usize, killed: &[Monomial]) -> Vec<Monomial> {
    let bounds: Vec<u32> = (0..nvars)
        .map(|v| {
            killed
                .iter()
                .filter(|m| m.pure_power_of() == Some(v))
                .map(|m| m.0[v])
                .min()
                .expect("validated: every variable has a killed pure power")
        })
        .collect();
    let mut basis = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial(exps.clone());
        if !killed.iter().any(|k| k.divides(&m)) {
            basis.push(m);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == nvars {
                basis.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0)));
                return basis;
            }
            exps[i] += 1;
            if exps[i] < bounds[i] {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

fn monomial_algebra(q: u64, vars: &[String], killed: &[Monomial]) -> FiniteRing {
    let (p, k) = prime_power(q).expect("validated prime power");
    let field = galois_field(p as usize, k as usize);
    let q = q as usize;
    let basis = monomial_basis(vars.len(), killed);
    let b = basis.len();
    let n = q.pow(b as u32);
    let position = |m: &Monomial| basis.iter().position(|x| x == m);
    let prod_index: Vec<Option<usize>> = (0..b * b)
        .map(|ij| {
            let (i, j) = (ij / b, ij % b);
            let m = Monomial(basis[i].0.iter().zip(&basis[j].0).map(|(x, y)| x + y).collect());
            position(&m)
        })
        .collect();
    let coeffs: Vec<Vec<usize>> = (0..n).map(|i| digits(i, q, b)).collect();
    let encode = |c: &[usize]| c.iter().rev().fold(0, |acc, &d| acc * q + d);
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    let mut acc = vec![0usize; b];
    for x in 0..n {
        for y in 0..n {
            let sum: Vec<usize> = coeffs[x].iter().zip(&coeffs[y]).map(|(&s, &t)| field.add(s, t)).collect();
            add[x * n + y] = encode(&sum) as u32;
            acc.iter_mut().for_each(|c| *c = 0);
            for (i, &s) in coeffs[x].iter().enumerate().filter(|(_, &s)| s != 0) {
                for (j, &t) in coeffs[y].iter().enumerate().filter(|(_, &t)| t != 0) {
                    if let Some(target) = prod_index[i * b + j] {
                        acc[target] = field.add(acc[target], field.mul(s, t));
                    }
                }
            }
            mul[x * n + y] = encode(&acc) as u32;
        }
    }
    let labels = coeffs
        .iter()
        .map(|c| {
            let terms: Vec<String> = c
                .iter()
                .zip(&basis)
                .filter(|(&coef, _)| coef != 0)
                .map(|(&coef, m)| {
                    let mono = m.render(vars);
                    let coef_label = field.label(coef);
                    match (coef == 1, m.degree() == 0) {
                        (true, false) => mono,
                        (_, true) => coef_label.to_string(),
                        (false, false) if coef_label.contains('+') => format!("({coef_label}){mono}"),
                        (false, false) => format!("{coef_label}{mono}"),
                    }
                })
                .collect();
            if terms.is_empty() {
                "0".to_string()
            } else {
                terms.join("+")
            }
        })
        .collect();
    raw(add, mul, labels, "mon".to_string())
}

fn direct_product(factors: &[FiniteRing]) -> FiniteRing {
    let layout: Vec<usize> = factors.iter().map(|f| f.order).collect();
    let n: usize = layout.iter().product();
    let comps: Vec<Vec<usize>> = (0..n)
        .map(|mut a| {
            let mut c = vec![0; layout.len()];
            for (slot, o) in c.iter_mut().zip(&layout).rev() {
                *slot = a % o;
                a /= o;
            }
            c
        })
        .collect();
    let encode = |c: &mut dyn Iterator<Item = usize>| c.zip(&layout).fold(0, |acc, (x, o)| acc * o + x);
    let mut add = vec![0u32; n * n];
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            let pairs = || factors.iter().zip(comps[a].iter().zip(&comps[b]));
            add[a * n + b] = encode(&mut pairs().map(|(f, (&x, &y))| f.add(x, y))) as u32;
            mul[a * n + b] = encode(&mut pairs().map(|(f, (&x, &y))| f.mul(x, y))) as u32;
        }
    }
    let one = encode(&mut factors.iter().map(|f| f.one));
    let zero = encode(&mut factors.iter().map(|f| f.zero));
    let labels = comps
        .iter()
        .map(|c| {
            let parts: Vec<&str> = factors.iter().zip(c).map(|(f, &x)| f.label(x)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    FiniteRing::from_tables(add, mul, zero, one, labels, "prod", false)
        .expect("componentwise tables are closed")
        .with_layout(layout)
}
