//! Human-readable output.
//!
//! For `m ≥ 2` the first two coordinates are rewritten in the complex
//! variables `z_± = x1 ± i x2` and the vector parts `w_± = e1 ± i e2`, so a
//! polynomial becomes a sum of terms `c · z_+^a z_-^b x3^… · g · e_R` with
//! `g ∈ {1, w_+, w_-, e12}` and `R ⊆ {3,…,m}`. The change of variables is
//! invertible, so the text form parses back to the same polynomial.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::clifford::Blade;
use crate::mvpoly::MVPolynomial;
use crate::scalar::Scalar;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
enum Head {
    One,
    WPlus,
    WMinus,
    E12,
}

/// A display term: blade head and remainder, then exponents (z_+, z_-, x3, …).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Key {
    degree: u32,
    exps: Vec<std::cmp::Reverse<u32>>,
    head: Head,
    rest: Blade,
}

fn binom(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * BigInt::from(n - t) / BigInt::from(t + 1);
    }
    acc
}

/// `i^{-b}`.
fn inv_i_pow(b: u32) -> Scalar {
    match b % 4 {
        0 => Scalar::one(),
        1 => -Scalar::i(),
        2 => Scalar::from_int(-1),
        _ => Scalar::i(),
    }
}

fn to_complex_frame(p: &MVPolynomial) -> BTreeMap<Key, Scalar> {
    let m = p.dim();
    let mut out: BTreeMap<Key, Scalar> = BTreeMap::new();
    let low = Blade(0b11);
    for ((mono, blade), c) in p.terms() {
        let (a, b) = (mono.exp(1), mono.exp(2));
        let rest_exps: Vec<u32> = (3..=m).map(|j| mono.exp(j)).collect();
        let rest = Blade(blade.0 & !low.0);
        // e1 = (w_+ + w_-)/2, e2 = -i (w_+ - w_-)/2
        let heads: Vec<(Head, Scalar)> = match blade.0 & low.0 {
            0 => vec![(Head::One, Scalar::one())],
            1 => vec![
                (Head::WPlus, Scalar::ratio(1, 2)),
                (Head::WMinus, Scalar::ratio(1, 2)),
            ],
            2 => {
                let h = Scalar::new(BigRational::zero(), BigRational::new((-1).into(), 2.into()));
                vec![(Head::WPlus, h.clone()), (Head::WMinus, -h)]
            }
            _ => vec![(Head::E12, Scalar::one())],
        };
        // x1^a x2^b = (z_+ + z_-)^a (z_+ - z_-)^b / (2^{a+b} i^b)
        let scale = c
            * &inv_i_pow(b)
            * &Scalar::real(BigRational::new(BigInt::one(), BigInt::from(2).pow(a + b)));
        for pa in 0..=a {
            for qb in 0..=b {
                let mut coef = Scalar::real(BigRational::from_integer(binom(a, pa) * binom(b, qb)));
                if (b - qb) % 2 == 1 {
                    coef = -coef;
                }
                let zp = pa + qb;
                let zm = a + b - zp;
                let mut exps = vec![std::cmp::Reverse(zp), std::cmp::Reverse(zm)];
                exps.extend(rest_exps.iter().map(|&e| std::cmp::Reverse(e)));
                for (head, hc) in &heads {
                    let key = Key {
                        degree: mono.degree(),
                        exps: exps.clone(),
                        head: *head,
                        rest,
                    };
                    let v = &(&scale * &coef) * hc;
                    let slot = out.entry(key).or_insert_with(Scalar::zero);
                    *slot += &v;
                }
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Text,
    Latex,
}

fn rat(r: &BigRational, style: Style) -> String {
    match style {
        Style::Text => Scalar::rat_to_string(r),
        Style::Latex => {
            if r.is_integer() {
                r.numer().to_string()
            } else {
                format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
            }
        }
    }
}

/// Returns (negative, magnitude string or None when the magnitude is 1).
fn coefficient(c: &Scalar, style: Style) -> (bool, Option<String>) {
    let (re, im) = (c.re(), c.im());
    let times = if style == Style::Text { "*" } else { " " };
    if im.is_zero() {
        let mag = re.abs();
        return (
            re.is_negative(),
            if mag.is_one() {
                None
            } else {
                Some(rat(&mag, style))
            },
        );
    }
    if re.is_zero() {
        let mag = im.abs();
        let s = if mag.is_one() {
            "i".to_string()
        } else {
            format!("{}{times}i", rat(&mag, style))
        };
        return (im.is_negative(), Some(s));
    }
    let sign = if im.is_negative() { "-" } else { "+" };
    let mag = im.abs();
    let imag = if mag.is_one() {
        "i".to_string()
    } else {
        format!("{}{times}i", rat(&mag, style))
    };
    let body = format!("{}{sign}{imag}", rat(re, style));
    let s = match style {
        Style::Text => format!("({body})"),
        Style::Latex => format!("\\left({body}\\right)"),
    };
    (false, Some(s))
}

fn power(base: &str, e: u32, style: Style) -> String {
    match (e, style) {
        (1, _) => base.to_string(),
        (_, Style::Text) => format!("{base}^{e}"),
        (_, Style::Latex) => format!("{base}^{{{e}}}"),
    }
}

fn blade_name(b: Blade, style: Style) -> String {
    let digits: String = b.indices().iter().map(|i| i.to_string()).collect();
    match style {
        Style::Text => format!("e{digits}"),
        Style::Latex => format!("e_{{{digits}}}"),
    }
}

fn factors(m: usize, key: &Key, style: Style) -> Vec<String> {
    let mut f = Vec::new();
    let names: Vec<String> = match style {
        Style::Text => ["z_+", "z_-"].iter().map(|s| s.to_string()).collect(),
        Style::Latex => ["z_{+}", "z_{-}"].iter().map(|s| s.to_string()).collect(),
    };
    for (idx, e) in key.exps.iter().enumerate() {
        let e = e.0;
        if e == 0 {
            continue;
        }
        let name = if idx < 2 {
            names[idx].clone()
        } else {
            match style {
                Style::Text => format!("x{}", idx + 1),
                Style::Latex => format!("x_{{{}}}", idx + 1),
            }
        };
        f.push(power(&name, e, style));
    }
    let _ = m;
    let blade = match key.head {
        Head::E12 => Some(Blade(key.rest.0 | 0b11)),
        Head::One if key.rest.0 != 0 => Some(key.rest),
        _ => None,
    };
    match key.head {
        Head::WPlus => f.push(if style == Style::Text {
            "w_+".into()
        } else {
            "w_{+}".into()
        }),
        Head::WMinus => f.push(if style == Style::Text {
            "w_-".into()
        } else {
            "w_{-}".into()
        }),
        _ => {}
    }
    if let Some(b) = blade {
        f.push(blade_name(b, style));
    } else if matches!(key.head, Head::WPlus | Head::WMinus) && key.rest.0 != 0 {
        f.push(blade_name(key.rest, style));
    }
    f
}

fn plain_terms(p: &MVPolynomial) -> BTreeMap<Key, Scalar> {
    p.terms()
        .map(|((mono, blade), c)| {
            let exps = (1..=p.dim())
                .map(|j| std::cmp::Reverse(mono.exp(j)))
                .collect();
            (
                Key {
                    degree: mono.degree(),
                    exps,
                    head: Head::One,
                    rest: *blade,
                },
                c.clone(),
            )
        })
        .collect()
}

fn plain_factors(key: &Key, style: Style) -> Vec<String> {
    let mut f = Vec::new();
    for (idx, e) in key.exps.iter().enumerate() {
        if e.0 > 0 {
            let name = match style {
                Style::Text => format!("x{}", idx + 1),
                Style::Latex => format!("x_{{{}}}", idx + 1),
            };
            f.push(power(&name, e.0, style));
        }
    }
    if key.rest.0 != 0 {
        f.push(blade_name(key.rest, style));
    }
    f
}

fn render(p: &MVPolynomial, style: Style) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let complex_frame = p.dim() >= 2;
    let terms = if complex_frame {
        to_complex_frame(p)
    } else {
        plain_terms(p)
    };
    let mut out = String::new();
    for (n, (key, c)) in terms.iter().enumerate() {
        let (neg, mag) = coefficient(c, style);
        let mut parts = if complex_frame {
            factors(p.dim(), key, style)
        } else {
            plain_factors(key, style)
        };
        if let Some(mag) = mag {
            parts.insert(0, mag);
        }
        if parts.is_empty() {
            parts.push("1".into());
        }
        let sep = if style == Style::Text { "*" } else { " " };
        let body = parts.join(sep);
        match (n, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                let _ = write!(out, "-{body}");
            }
            (_, false) => {
                let _ = write!(out, " + {body}");
            }
            (_, true) => {
                let _ = write!(out, " - {body}");
            }
        }
    }
    out
}

pub fn to_text(p: &MVPolynomial) -> String {
    render(p, Style::Text)
}

pub fn to_latex(p: &MVPolynomial) -> String {
    render(p, Style::Latex)
}
