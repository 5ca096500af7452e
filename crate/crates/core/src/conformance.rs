//! Runs every formula-versus-oracle comparison over a parameter range and
//! renders the outcomes as a markdown table.

use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::curve::{decomposition_check, fractal_curve, scale_factor, symmetries};
use crate::error::Result;
use crate::metrics::{
    area, area_recurrence_holds, bounding_square_side, dimension_estimate, dimension_limit,
    dimension_ratio_estimate, endpoint_formula, endpoint_trace, pell_number,
    pell_number_closed_form, perimeter, EndpointVector,
};
use crate::path::{is_boundary_word, is_closed, is_simple, sigma};
use crate::snowflake::{
    bn_square_factorizations, bn_square_factorizations_naive, boundary_word, build_polyomino,
    factor_palindromicity, pal_structure, q_limit_check, q_word, second_boundary, sigma_symbol,
};
use crate::tiling::{certificates, lattices_distinct};
use crate::word::{
    characteristic_word, classic_fib_word, common_prefix_len, fib_number,
    fib_number_closed_form, fib_word, fib_word_prefix, phi_drop2, stable_complexity, Morphism,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    /// The stated form disagrees with direct computation; the computation governs.
    Resolved,
    /// Recorded behavior outside the stated claims.
    Observed,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Resolved => "resolved",
            Status::Observed => "observed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub claim: String,
    /// The functions whose agreement is checked.
    pub reference: String,
    pub range: String,
    pub status: Status,
    pub detail: String,
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} ({}): {}", self.status, self.claim, self.range, self.detail)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest snowflake order.
    pub max_n: u32,
    /// Largest family parameter.
    pub max_i: u64,
    /// Largest word index for word-level identities.
    pub max_word_n: u32,
    /// Prefix length for the characteristic-word comparison.
    pub characteristic_len: usize,
}

impl Default for Config {
    fn default() -> Self {
        Self {
            max_n: 3,
            max_i: 6,
            max_word_n: 12,
            characteristic_len: 10_000,
        }
    }
}

fn record(claim: &str, reference: &str, range: String, status: Status, detail: String) -> CheckRecord {
    CheckRecord {
        claim: claim.into(),
        reference: reference.into(),
        range,
        status,
        detail,
    }
}

/// Pass iff every case holds; otherwise names the first counterexample.
fn verify<I>(claim: &str, reference: &str, range: String, cases: I) -> CheckRecord
where
    I: IntoIterator<Item = (String, Result<bool>)>,
{
    let mut count = 0;
    for (label, outcome) in cases {
        count += 1;
        match outcome {
            Ok(true) => {}
            Ok(false) => {
                return record(claim, reference, range, Status::Fail, format!("first counterexample: {label}"))
            }
            Err(e) => {
                return record(claim, reference, range, Status::Fail, format!("{label}: {e}"))
            }
        }
    }
    record(claim, reference, range, Status::Pass, format!("{count} cases"))
}

fn grid(is: impl Iterator<Item = u64> + Clone, ns: impl Iterator<Item = u32> + Clone) -> Vec<(u64, u32)> {
    is.flat_map(|i| ns.clone().map(move |n| (i, n))).collect()
}

fn label(i: u64, n: u32) -> String {
    format!("i={i}, n={n}")
}

fn word_checks(cfg: &Config, out: &mut Vec<CheckRecord>) {
    let mw = cfg.max_word_n;
    let mi = cfg.max_i;
    out.push(verify(
        "closed form of F_n^[i] equals the recurrence",
        "fib_number_closed_form / fib_number",
        format!("n <= 40, 1 <= i <= {mi}"),
        grid(1..=mi, 0..=40).into_iter().map(|(i, n)| {
            let ok = fib_number_closed_form(n, i)
                .and_then(|c| Ok(c == Some(BigInt::from(fib_number(n, i)?))));
            (label(i, n), ok)
        }),
    ));
    out.push(verify(
        "closed form of P^[i](n) equals the recurrence",
        "pell_number_closed_form / pell_number",
        "n <= 40, 0 <= i <= 5".into(),
        grid(0..=5, 0..=40)
            .into_iter()
            .map(|(i, n)| (label(i, n), Ok(pell_number_closed_form(n, i) == Some(pell_number(n, i))))),
    ));
    out.push(verify(
        "|f_n^[i]| = F_n^[i]",
        "fib_word / fib_number",
        format!("n <= {mw}, 1 <= i <= {mi}"),
        grid(1..=mi, 0..=mw).into_iter().map(|(i, n)| {
            let ok = fib_word(n, i).and_then(|w| Ok(BigInt::from(w.len()) == BigInt::from(fib_number(n, i)?)));
            (label(i, n), ok)
        }),
    ));
    let len = cfg.characteristic_len;
    out.push(verify(
        "f^[i] is the characteristic word of slope (i - phi)/(i^2 - i - 1)",
        "characteristic_word / fib_word_prefix",
        format!("prefix length {len}, 1 <= i <= {mi}"),
        (1..=mi).map(|i| {
            let ok = characteristic_word(i, len).and_then(|c| Ok(c == fib_word_prefix(i, len)?));
            (format!("i={i}"), ok)
        }),
    ));
    out.push(verify(
        "f^[i] has complexity n + 1",
        "stable_complexity",
        format!("1 <= n <= 8, 1 <= i <= {mi}"),
        grid(1..=mi, 1..=8)
            .into_iter()
            .map(|(i, n)| (label(i, n), stable_complexity(i, n as usize).map(|c| c == n as usize + 1))),
    ));
    let sturm = grid(2..=mi, 0..=mw);
    out.push(verify(
        "11 is not a factor of f_n^[i]",
        "fib_word",
        format!("n <= {mw}, 2 <= i <= {mi}"),
        sturm
            .iter()
            .map(|&(i, n)| (label(i, n), fib_word(n, i).map(|w| !w.contains_factor(&[1, 1])))),
    ));
    out.push(verify(
        "f_n^[i] ends in 10 for even n and 01 for odd n",
        "fib_word",
        format!("1 <= n <= {mw}, 2 <= i <= {mi}"),
        grid(2..=mi, 1..=mw).into_iter().map(|(i, n)| {
            let want: [u8; 2] = if n % 2 == 0 { [1, 0] } else { [0, 1] };
            let ok = fib_word(n, i).map(|w| w.symbols()[w.len() - 2..] == want);
            (label(i, n), ok)
        }),
    ));
    out.push(verify(
        "f_{n-1}f_{n-2} and f_{n-2}f_{n-1} agree exactly on their first F_n - 2 symbols",
        "fib_word / common_prefix_len",
        format!("2 <= n <= {mw}, 2 <= i <= {mi}"),
        grid(2..=mi, 2..=mw).into_iter().map(|(i, n)| {
            let ok = (|| {
                let (a, b) = (fib_word(n - 1, i)?, fib_word(n - 2, i)?);
                let (x, y) = (a.concat(&b), b.concat(&a));
                let expected = fib_number(n, i)?;
                Ok(BigInt::from(common_prefix_len(x.symbols(), y.symbols())) == BigInt::from(expected) - 2)
            })();
            (label(i, n), ok)
        }),
    ));
    out.push(verify(
        "f_n^[i] without its last two symbols is a palindrome",
        "phi_drop2",
        format!("1 <= n <= {mw}, 2 <= i <= {mi}"),
        grid(2..=mi, 1..=mw)
            .into_iter()
            .map(|(i, n)| (label(i, n), fib_word(n, i).and_then(|w| phi_drop2(&w)).map(|p| p.is_palindrome()))),
    ));
    out.push(verify(
        "f_n = f_{n-3} f_{n-3} f_{n-6} l_{n-3} l_{n-3}",
        "decomposition_check",
        format!("6 <= n <= {mw}, 2 <= i <= {mi}"),
        grid(2..=mi, 6..=mw.max(6))
            .into_iter()
            .map(|(i, n)| (label(i, n), decomposition_check(i, n))),
    ));
    out.push(verify(
        "0 -> 0, 1 -> 0^i 1 maps the classic f_n to f_{n-1}^[i+2]",
        "Morphism::phi / classic_fib_word / fib_word",
        format!("2 <= n <= {mw}, 0 <= i <= 4"),
        grid(0..=4, 2..=mw).into_iter().map(|(i, n)| {
            let image = Morphism::phi(i as usize).apply(&classic_fib_word(n));
            (label(i, n), fib_word(n - 1, i + 2).map(|f| f == image))
        }),
    ));
}

fn curve_checks(cfg: &Config, out: &mut Vec<CheckRecord>) {
    let mi = cfg.max_i;
    let top = cfg.max_word_n.max(15);
    out.push(verify(
        "curve segments have length 1 or 2",
        "fractal_curve / segments",
        format!("n <= {top}, 2 <= i <= {mi}"),
        grid(2..=mi, 0..=top).into_iter().map(|(i, n)| {
            let ok = fractal_curve(n, i)
                .map(|c| crate::curve::segments(&c).iter().all(|&l| l == 1 || l == 2));
            (label(i, n), ok)
        }),
    ));
    let limit = 1.0 + 2f64.sqrt();
    out.push(verify(
        "scale factor L_n / L_{n-3} tends to 1 + sqrt 2 (within 2% at n = 15)",
        "scale_factor",
        format!("n = 15, 2 <= i <= {mi}"),
        (2..=mi).map(|i| {
            (format!("i={i}"), scale_factor(i, 15).map(|r| (r - limit).abs() / limit < 0.02))
        }),
    ));
    let dist = |n: u32| -> Result<f64> {
        Ok((fractal_curve(n, 2)?.displacement().norm_sq() as f64).sqrt())
    };
    let mut exact = Vec::new();
    let mut worst: f64 = 0.0;
    for n in 9..=15u32 {
        if let (Ok(a), Ok(b), Ok(c)) = (dist(n), dist(n - 3), dist(n - 6)) {
            let rel = (a - (2.0 * b + c)).abs() / a;
            if rel < 1e-9 {
                exact.push(n);
            } else {
                worst = worst.max(rel);
            }
        }
    }
    out.push(record(
        "endpoint distances satisfy L_n = 2 L_{n-3} + L_{n-6}",
        "fractal_curve",
        "9 <= n <= 15, i = 2".into(),
        if exact.len() == 7 { Status::Pass } else { Status::Resolved },
        format!(
            "exact at n in {exact:?}; elsewhere off by at most {:.1}% (the endpoint vectors are not parallel there)",
            worst * 100.0
        ),
    ));
    // the last stroke of f_n's curve breaks every symmetry; the turn sequence
    // of the trimmed curve is the palindrome obtained by deleting two symbols
    let sym = verify(
        "curve without its last stroke is point-symmetric iff F_n^[i] is even, else line-symmetric",
        "fractal_curve / symmetries",
        format!("2 <= n <= 13, 2 <= i <= {mi}"),
        grid(2..=mi, 2..=13).into_iter().map(|(i, n)| {
            let ok = (|| {
                let s = symmetries(&fractal_curve(n, i)?.without_final_step());
                let even = fib_number(n, i)? % 2u32 == 0u32.into();
                Ok(if even { s.point && !s.line } else { s.line && !s.point })
            })();
            (label(i, n), ok)
        }),
    );
    out.push(sym);
    let full_asym = (2..=mi).all(|i| {
        (4..=12).all(|n| {
            fractal_curve(n, i)
                .map(|c| {
                    let s = symmetries(&c);
                    !s.line && !s.point
                })
                .unwrap_or(false)
        })
    });
    out.push(record(
        "symmetry classes by n mod 3: even i point-symmetric at n = 3k+1, odd i at n = 3k+2",
        "fractal_curve / symmetries",
        format!("4 <= n <= 12, 2 <= i <= {mi}"),
        Status::Resolved,
        format!(
            "the untrimmed curves are {}; on trimmed curves the classes follow the parity of F_n^[i], which gives n = 3k+1 for even i and n = 3k+2 for odd i",
            if full_asym { "never exactly symmetric" } else { "sometimes symmetric" }
        ),
    ));
}

fn q_checks(cfg: &Config, out: &mut Vec<CheckRecord>) {
    let mi = cfg.max_i;
    let mw = cfg.max_word_n;
    out.push(verify(
        "|q_n^[i]| = F_{n-1}^[i]",
        "q_word / fib_number",
        format!("1 <= n <= {mw}, 1 <= i <= {mi}"),
        grid(1..=mi, 1..=mw).into_iter().map(|(i, n)| {
            let ok = q_word(n, i).and_then(|q| Ok(BigInt::from(q.word.len()) == BigInt::from(fib_number(n - 1, i)?)));
            (label(i, n), ok)
        }),
    ));
    out.push(verify(
        "delta(q_n) alpha_{n-1} is f_{n-1} rewritten over {0, 2}",
        "q_limit_check",
        format!("2 <= n <= {mw}, 1 <= i <= {mi}"),
        grid(1..=mi, 2..=mw)
            .into_iter()
            .map(|(i, n)| (label(i, n), q_limit_check(n, i))),
    ));
    for case in 1..=3u32 {
        out.push(verify(
            &format!("palindromic structure of q_(3n+{case})"),
            "pal_structure",
            format!("0 <= n <= 4, 2 <= i <= {mi}"),
            grid(2..=mi, 0..=4).into_iter().map(|(i, n)| {
                (format!("i={i}, n={n}"), pal_structure(3 * n + case, i).map(|r| r.holds()))
            }),
        ));
    }
    let mut odd_finals = Vec::new();
    for i in (3..=mi.max(3)).step_by(2) {
        for n in 0..=4u32 {
            for case in 1..=2u32 {
                if let Ok(r) = pal_structure(3 * n + case, i) {
                    odd_finals.push(r.final_symbol == sigma_symbol(n));
                }
            }
        }
    }
    out.push(record(
        "odd i: q_(3n+1) and q_(3n+2) end in bar(sigma_n)",
        "pal_structure",
        format!("0 <= n <= 4, odd 3 <= i <= {}", mi.max(3)),
        Status::Resolved,
        format!(
            "both end in sigma_n in {} of {} cases; the body types hold, so the final symbol is sigma_n",
            odd_finals.iter().filter(|&&b| b).count(),
            odd_finals.len()
        ),
    ));
    out.push(verify(
        "sigma_alpha(q_n^[i]) is simple",
        "sigma / is_simple",
        format!("n <= {mw}, alpha in 0..3, 2 <= i <= {mi}"),
        grid(2..=mi, 0..=mw).into_iter().map(|(i, n)| {
            let ok = q_word(n, i).and_then(|q| {
                (0..4).try_fold(true, |acc, a| Ok(acc && is_simple(&sigma(a, &q.word)?)))
            });
            (label(i, n), ok)
        }),
    ));
}

const LISTED_I4: [[(i64, i64); 5]; 3] = [
    [(1, 0), (5, 0), (11, 0), (27, 0), (65, 0)],
    [(2, 2), (3, -3), (8, 8), (19, -19), (46, 6)],
    [(3, 2), (8, -3), (19, 8), (46, -19), (111, 46)],
];

fn snowflake_checks(cfg: &Config, out: &mut Vec<CheckRecord>) {
    let mi = cfg.max_i;
    let mn = cfg.max_n;
    let flakes = grid(2..=mi, 1..=mn);
    let range = format!("1 <= n <= {mn}, 2 <= i <= {mi}");
    out.push(verify(
        "endpoint of sigma°_0(q_m) matches the Pell-number coordinates",
        "endpoint_formula / endpoint_trace",
        format!("1 <= m <= 15, 2 <= i <= {mi}"),
        grid(2..=mi, 1..=15).into_iter().map(|(i, m)| {
            let ok = endpoint_formula(m, i).and_then(|f| Ok(f == endpoint_trace(m, i)?));
            (format!("i={i}, m={m}"), ok)
        }),
    ));
    let mut mismatches = Vec::new();
    for (r, row) in LISTED_I4.iter().enumerate() {
        for (n, &(x, y)) in row.iter().enumerate() {
            let m = 3 * n as u32 + r as u32 + 1;
            if let Ok(t) = endpoint_trace(m, 4) {
                if t != EndpointVector::new(x, y) {
                    mismatches.push(format!("m={m}: listed ({x}, {y}), traced {t}"));
                }
            }
        }
    }
    out.push(record(
        "listed endpoint coordinates for i = 4",
        "endpoint_trace",
        "0 <= n <= 4, m = 3n+1..3n+3".into(),
        if mismatches.is_empty() { Status::Pass } else { Status::Resolved },
        if mismatches.is_empty() {
            "all 15 entries match".into()
        } else {
            format!("trace governs; {}", mismatches.join("; "))
        },
    ));
    let polys: Vec<_> = flakes
        .iter()
        .map(|&(i, n)| ((i, n), boundary_word(n, i).and_then(|b| build_polyomino(&b))))
        .collect();
    out.push(verify(
        "snowflake boundary is closed and simple",
        "boundary_word / is_boundary_word",
        format!("1 <= n <= {}, 2 <= i <= {mi}", mn.max(4)),
        grid(2..=mi, 1..=mn.max(4))
            .into_iter()
            .map(|(i, n)| (label(i, n), boundary_word(n, i).map(|b| is_boundary_word(&b)))),
    ));
    out.push(verify(
        "perimeter is 4F_{3n-1} (even i) or 4F_{3n+1} (odd i)",
        "perimeter / boundary_word",
        format!("1 <= n <= {}, 2 <= i <= {mi}", mn.max(4)),
        grid(2..=mi, 1..=mn.max(4)).into_iter().map(|(i, n)| {
            let ok = boundary_word(n, i).and_then(|b| Ok(perimeter(n, i)? == BigInt::from(b.len())));
            (label(i, n), ok)
        }),
    ));
    out.push(verify(
        "area is a sum of two squares of Pell-type numbers",
        "area / build_polyomino",
        range.clone(),
        polys.iter().map(|((i, n), p)| {
            let ok = match p {
                Ok(p) => area(*n, *i).map(|a| a == BigInt::from(p.area())),
                Err(e) => Err(e.clone()),
            };
            (label(*i, *n), ok)
        }),
    ));
    out.push(verify(
        "A(n) = 6A(n-1) - A(n-2)",
        "area_recurrence_holds",
        format!("3 <= n <= 10, 2 <= i <= {mi}"),
        grid(2..=mi, 3..=10)
            .into_iter()
            .map(|(i, n)| (label(i, n), area_recurrence_holds(n, i))),
    ));
    out.push(verify(
        "bounding square side (2P^[k](n+1) - 1 for even i, P^[k](n+1) + P^[k](n+2) for odd i)",
        "bounding_square_side / build_polyomino",
        range.clone(),
        polys.iter().map(|((i, n), p)| {
            let ok = match p {
                Ok(p) => {
                    let (w, h) = p.bounding_box();
                    bounding_square_side(*n, *i).map(|s| s == BigInt::from(w.max(h)))
                }
                Err(e) => Err(e.clone()),
            };
            (label(*i, *n), ok)
        }),
    ));
    let odd_alt: Vec<String> = flakes
        .iter()
        .filter(|(i, _)| i % 2 == 1)
        .filter_map(|&(i, n)| {
            let k = (i - 3) / 2;
            let alt = pell_number(n + 2, k) * 2 - 1;
            let side = bounding_square_side(n, i).ok()?;
            (alt != side).then(|| format!("i={i}, n={n}: 2P(n+2) - 1 = {alt}, box {side}"))
        })
        .collect();
    out.push(record(
        "odd i bounding side as 2P^[k](n+2) - 1",
        "bounding_square_side",
        format!("1 <= n <= {mn}, odd 3 <= i <= {mi}"),
        if odd_alt.is_empty() { Status::Pass } else { Status::Resolved },
        if odd_alt.is_empty() {
            "agrees with the bounding box".into()
        } else {
            format!("the box side is P^[k](n+1) + P^[k](n+2); {}", odd_alt.join("; "))
        },
    ));
    let factorizations: Vec<_> = flakes
        .iter()
        .map(|&(i, n)| ((i, n), boundary_word(n, i).and_then(|b| bn_square_factorizations(&b))))
        .collect();
    out.push(verify(
        "snowflake is a double square",
        "bn_square_factorizations",
        range.clone(),
        factorizations
            .iter()
            .map(|((i, n), f)| (label(*i, *n), f.clone().map(|f| f.len() == 2))),
    ));
    out.push(verify(
        "square factors A and B are palindromes",
        "factor_palindromicity",
        range.clone(),
        factorizations.iter().map(|((i, n), f)| {
            (label(*i, *n), f.clone().map(|f| f.iter().all(factor_palindromicity)))
        }),
    ));
    out.push(verify(
        "second boundary word traces the same tile",
        "second_boundary / build_polyomino",
        range.clone(),
        polys.iter().map(|((i, n), p)| {
            let ok = match p {
                Ok(p) => second_boundary(*n, *i)
                    .and_then(|b| build_polyomino(&b))
                    .map(|q| q.is_translate_of(p)),
                Err(e) => Err(e.clone()),
            };
            (label(*i, *n), ok)
        }),
    ));
    let small: Vec<_> = grid(2..=mi, 1..=mn)
        .into_iter()
        .filter_map(|(i, n)| {
            let b = boundary_word(n, i).ok()?;
            (b.len() <= 200).then_some((format!("snowflake i={i}, n={n}"), b))
        })
        .chain(
            ["0123", "001223", "010303232121", "2122323030103011", "00112233"]
                .iter()
                .map(|s| (format!("word {s}"), s.parse().expect("valid path word"))),
        )
        .collect();
    out.push(verify(
        "fast factorization search agrees with exhaustive search",
        "bn_square_factorizations / bn_square_factorizations_naive",
        "boundaries of length <= 200".into(),
        small.iter().map(|(l, b)| {
            let ok = bn_square_factorizations(b)
                .and_then(|f| Ok(f == bn_square_factorizations_naive(b)?));
            (l.clone(), ok)
        }),
    ));
    let i1: Vec<String> = (1..=mn)
        .filter_map(|n| {
            let b = boundary_word(n, 1).ok()?;
            Some(format!(
                "n={n}: closed={}, simple={}",
                is_closed(&b),
                is_simple(&b)
            ))
        })
        .collect();
    out.push(record(
        "i = 1 snowflake words",
        "boundary_word",
        format!("1 <= n <= {mn}, i = 1"),
        Status::Observed,
        i1.join("; "),
    ));
}

fn tiling_checks(cfg: &Config, out: &mut Vec<CheckRecord>) {
    let mn = cfg.max_n.min(2);
    let mi = cfg.max_i.min(4);
    let cases = grid(2..=mi, 1..=mn);
    let range = format!("1 <= n <= {mn}, 2 <= i <= {mi}");
    let certs: Vec<_> = cases
        .iter()
        .map(|&(i, n)| {
            let c = boundary_word(n, i)
                .and_then(|b| build_polyomino(&b))
                .and_then(|p| Ok((p.area(), certificates(&p)?)));
            ((i, n), c)
        })
        .collect();
    out.push(verify(
        "both translation lattices cover a window exactly once, with |det| = area",
        "certificates / tile_window",
        range.clone(),
        certs.iter().map(|((i, n), c)| {
            let ok = c.clone().map(|(a, cs)| {
                cs.len() == 2
                    && cs
                        .iter()
                        .all(|c| c.verified() && c.determinant().unsigned_abs() as usize == a)
            });
            (label(*i, *n), ok)
        }),
    ));
    out.push(verify(
        "the two tilings use different lattices",
        "lattices_distinct",
        range,
        certs.iter().map(|((i, n), c)| {
            let ok = c.clone().and_then(|(_, cs)| {
                if cs.len() != 2 {
                    return Ok(false);
                }
                lattices_distinct((cs[0].u, cs[0].v), (cs[1].u, cs[1].v))
            });
            (label(*i, *n), ok)
        }),
    ));
}

fn dimension_checks(cfg: &Config, out: &mut Vec<CheckRecord>) {
    let mi = cfg.max_i;
    let limit = dimension_limit();
    out.push(verify(
        "successive-order dimension quotient tends to 3 ln(phi) / ln(1 + sqrt 2) for every i",
        "dimension_ratio_estimate",
        format!("n = 30, 2 <= i <= {mi}"),
        (2..=mi).map(|i| {
            (format!("i={i}"), dimension_ratio_estimate(i, 30).map(|d| (d - limit).abs() < 1e-3))
        }),
    ));
    out.push(verify(
        "ln(perimeter) / ln(side) is within 0.05 of the limit",
        "dimension_estimate",
        "n = 10, i = 2".into(),
        [("i=2, n=10".to_string(), dimension_estimate(2, 10).map(|d| (d - limit).abs() < 0.05))],
    ));
    let at12: Vec<(u64, f64)> = (2..=mi)
        .filter_map(|i| dimension_estimate(i, 12).ok().map(|d| (i, d)))
        .collect();
    let lo = at12.iter().map(|p| p.1).fold(f64::INFINITY, f64::min);
    let hi = at12.iter().map(|p| p.1).fold(f64::NEG_INFINITY, f64::max);
    out.push(record(
        "ln(perimeter) / ln(side) at a fixed order is nearly independent of i",
        "dimension_estimate",
        format!("n = 12, 2 <= i <= {mi}"),
        Status::Observed,
        format!(
            "spread {:.4}; values {}; the quotient converges like 1/n, so finite orders differ by i",
            hi - lo,
            at12.iter()
                .map(|(i, d)| format!("i={i}: {d:.4}"))
                .collect::<Vec<_>>()
                .join(", ")
        ),
    ));
}

/// Every check, in a fixed order.
pub fn run_all(cfg: &Config) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    word_checks(cfg, &mut out);
    curve_checks(cfg, &mut out);
    q_checks(cfg, &mut out);
    snowflake_checks(cfg, &mut out);
    tiling_checks(cfg, &mut out);
    dimension_checks(cfg, &mut out);
    out
}

pub fn all_passed(records: &[CheckRecord]) -> bool {
    records.iter().all(|r| r.status != Status::Fail)
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

/// One table row per check: claim, reference, range, status.
pub fn to_markdown(records: &[CheckRecord]) -> String {
    let mut s = String::from("# Conformance\n\n| claim | reference | range | status |\n|---|---|---|---|\n");
    for r in records {
        s.push_str(&format!(
            "| {} | {} | {} | {} |\n",
            cell(&r.claim),
            cell(&r.reference),
            cell(&r.range),
            r.status
        ));
    }
    let notes: Vec<_> = records.iter().filter(|r| r.status != Status::Pass).collect();
    if !notes.is_empty() {
        s.push_str("\n## Notes\n\n");
        for r in notes {
            s.push_str(&format!("- {} ({}): {}\n", r.claim, r.status, r.detail));
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_is_clean() {
        let cfg = Config {
            max_n: 1,
            max_i: 3,
            max_word_n: 8,
            characteristic_len: 500,
        };
        let records = run_all(&cfg);
        for r in &records {
            assert_ne!(r.status, Status::Fail, "{r}");
        }
        let md = to_markdown(&records);
        assert!(md.contains("| claim | reference | range | status |"));
    }

    #[test]
    fn failure_names_counterexample() {
        let r = verify(
            "demo",
            "none",
            "n <= 2".into(),
            (0..3).map(|n| (format!("n={n}"), Ok(n != 1))),
        );
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.detail, "first counterexample: n=1");
    }
}
