//! Möbius transformations and the Dehn filling space of the torus.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_integer::Integer;
use thiserror::Error;

/// Trace tolerance used by [`classify`].
pub const TRACE_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HyperbolicError {
    #[error("matrix is singular or not finite")]
    Singular,
    #[error("complex length needs a loxodromic map, got {0}")]
    NotLoxodromic(Class),
    #[error("filling parameter w must be non-zero")]
    ZeroW,
    #[error("zeta = {0} must have positive imaginary part")]
    DegenerateZeta(Complex64),
    #[error("({0}, {1}) is not a coprime pair")]
    NotCoprime(i64, i64),
    #[error("the conjugator is only defined for finite w with sin(pi/w) != 0")]
    NoConjugator,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Class {
    Identity,
    Parabolic,
    Elliptic,
    Hyperbolic,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Class::Identity => "identity",
            Class::Parabolic => "parabolic",
            Class::Elliptic => "elliptic",
            Class::Hyperbolic => "hyperbolic",
        };
        f.write_str(s)
    }
}

/// A point of the Riemann sphere.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Point {
    Finite(Complex64),
    Infinity,
}

/// `z ↦ (az+b)/(cz+d)` with `ad - bc = 1`, defined up to sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MobiusMap {
    m: [[Complex64; 2]; 2],
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

impl MobiusMap {
    pub fn new(
        a: Complex64,
        b: Complex64,
        c: Complex64,
        d: Complex64,
    ) -> Result<MobiusMap, HyperbolicError> {
        let det = a * d - b * c;
        if det.norm() == 0.0 || !det.is_finite() {
            return Err(HyperbolicError::Singular);
        }
        let s = det.sqrt();
        Ok(MobiusMap {
            m: [[a / s, b / s], [c / s, d / s]],
        })
    }

    pub fn identity() -> MobiusMap {
        let (o, z) = (c(1.0, 0.0), c(0.0, 0.0));
        MobiusMap {
            m: [[o, z], [z, o]],
        }
    }

    /// `z ↦ λz` as `diag(√λ, 1/√λ)`.
    pub fn scaling(lambda: Complex64) -> Result<MobiusMap, HyperbolicError> {
        MobiusMap::new(lambda, c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0))
    }

    /// `z ↦ kz + t`.
    pub fn affine(k: Complex64, t: Complex64) -> Result<MobiusMap, HyperbolicError> {
        MobiusMap::new(k, t, c(0.0, 0.0), c(1.0, 0.0))
    }

    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        self.m
    }

    pub fn trace(&self) -> Complex64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn inverse(&self) -> MobiusMap {
        let [[a, b], [cc, d]] = self.m;
        MobiusMap {
            m: [[d, -b], [-cc, a]],
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MobiusMap) -> MobiusMap {
        let (x, y) = (self.m, other.m);
        let mut m = [[c(0.0, 0.0); 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = x[i][0] * y[0][j] + x[i][1] * y[1][j];
            }
        }
        let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let s = det.sqrt();
        if s.norm() > 0.0 && s.is_finite() {
            for row in m.iter_mut() {
                for cell in row.iter_mut() {
                    *cell /= s;
                }
            }
        }
        MobiusMap { m }
    }

    /// `self^k` by repeated squaring.
    pub fn pow(&self, k: i64) -> MobiusMap {
        let mut base = if k < 0 { self.inverse() } else { *self };
        let mut e = k.unsigned_abs();
        let mut acc = MobiusMap::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    pub fn apply(&self, z: Point) -> Point {
        let [[a, b], [cc, d]] = self.m;
        match z {
            Point::Infinity if cc.norm() == 0.0 => Point::Infinity,
            Point::Infinity => Point::Finite(a / cc),
            Point::Finite(z) => {
                let den = cc * z + d;
                if den.norm() == 0.0 {
                    Point::Infinity
                } else {
                    Point::Finite((a * z + b) / den)
                }
            }
        }
    }

    /// Entrywise maximum modulus of `self - other`, minimized over the sign
    /// of `other`.
    pub fn distance(&self, other: &MobiusMap) -> f64 {
        let dist = |sign: f64| {
            (0..4)
                .map(|k| (self.m[k / 2][k % 2] - other.m[k / 2][k % 2] * sign).norm())
                .fold(0.0, f64::max)
        };
        dist(1.0).min(dist(-1.0))
    }

    pub fn approx_eq(&self, other: &MobiusMap, tol: f64) -> bool {
        self.distance(other) < tol
    }
}

pub fn classify(f: &MobiusMap) -> Class {
    let t = f.trace();
    if (t - 2.0).norm() < TRACE_TOL || (t + 2.0).norm() < TRACE_TOL {
        if f.approx_eq(&MobiusMap::identity(), TRACE_TOL) {
            Class::Identity
        } else {
            Class::Parabolic
        }
    } else if t.im.abs() < TRACE_TOL && t.re.abs() < 2.0 {
        Class::Elliptic
    } else {
        Class::Hyperbolic
    }
}

/// `ℓ` with multiplier `e^ℓ`, `Re ℓ > 0`, `Im ℓ ∈ (-π, π]`.
pub fn complex_length(f: &MobiusMap) -> Result<Complex64, HyperbolicError> {
    let class = classify(f);
    if class != Class::Hyperbolic {
        return Err(HyperbolicError::NotLoxodromic(class));
    }
    let t = f.trace();
    let s = (t * t - 4.0).sqrt();
    let (plus, minus) = ((t + s) / 2.0, (t - s) / 2.0);
    let lambda = if plus.norm() >= minus.norm() {
        plus
    } else {
        minus
    };
    let ell = lambda.ln() * 2.0;
    let mut im = ell.im.rem_euclid(2.0 * PI);
    if im > PI {
        im -= 2.0 * PI;
    }
    Ok(c(ell.re, im))
}

/// The maps `A_w`, `B_w` and the conjugator `E_w` of the filling family.
#[derive(Debug, Clone, PartialEq)]
pub struct FillingFamily {
    /// `None` is `w = ∞`.
    pub w: Option<Complex64>,
    pub zeta: Complex64,
    pub a: MobiusMap,
    pub b: MobiusMap,
    pub e: Option<MobiusMap>,
}

/// `A_w(z) = e^{2πi/w} z`, `B_w(z) = e^{2πζi/w} z`; at `w = ∞`, `z + 1`
/// and `z + ζ`.
///
/// The conjugator is `E_w(z) = (i/2)(1 - z)/sin(π/w)`, so that
/// `E A E⁻¹(z) = e^{2πi/w} z + e^{πi/w}`.
pub fn filling_family(
    w: Option<Complex64>,
    zeta: Complex64,
) -> Result<FillingFamily, HyperbolicError> {
    if zeta.im.partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) || !zeta.is_finite() {
        return Err(HyperbolicError::DegenerateZeta(zeta));
    }
    let i = c(0.0, 1.0);
    let Some(w) = w else {
        return Ok(FillingFamily {
            w: None,
            zeta,
            a: MobiusMap::affine(c(1.0, 0.0), c(1.0, 0.0))?,
            b: MobiusMap::affine(c(1.0, 0.0), zeta)?,
            e: None,
        });
    };
    if w.norm() == 0.0 {
        return Err(HyperbolicError::ZeroW);
    }
    let a = MobiusMap::scaling((2.0 * PI * i / w).exp())?;
    let b = MobiusMap::scaling((2.0 * PI * zeta * i / w).exp())?;
    let sin = (PI / w).sin();
    let e = if sin.norm() > 1e-12 && sin.is_finite() {
        let h = i * 0.5 / sin;
        Some(MobiusMap::affine(-h, h)?)
    } else {
        None
    };
    Ok(FillingFamily {
        w: Some(w),
        zeta,
        a,
        b,
        e,
    })
}

/// Closed form of `E B E⁻¹`:
/// `e^{2πζi/w} z + e^{πζi/w}(e^{πζi/w} - e^{-πζi/w})/(e^{πi/w} - e^{-πi/w})`.
pub fn conjugated_b_closed_form(
    w: Complex64,
    zeta: Complex64,
) -> Result<MobiusMap, HyperbolicError> {
    let i = c(0.0, 1.0);
    let h = (PI * zeta * i / w).exp();
    let g = (PI * i / w).exp();
    let den = g - 1.0 / g;
    if den.norm() == 0.0 {
        return Err(HyperbolicError::NoConjugator);
    }
    MobiusMap::affine(h * h, h * (h - 1.0 / h) / den)
}

/// Distances of `E A E⁻¹` from `A_∞` and of `E B E⁻¹` from its closed form.
pub fn conjugation_residual(fam: &FillingFamily) -> Result<(f64, f64), HyperbolicError> {
    let (Some(w), Some(e)) = (fam.w, fam.e) else {
        return Err(HyperbolicError::NoConjugator);
    };
    let e_inv = e.inverse();
    let conj = |m: &MobiusMap| e.compose(m).compose(&e_inv);
    let a_inf = MobiusMap::affine(c(1.0, 0.0), c(1.0, 0.0))?;
    let closed = conjugated_b_closed_form(w, fam.zeta)?;
    Ok((
        conj(&fam.a).distance(&a_inf),
        conj(&fam.b).distance(&closed),
    ))
}

/// `2π/(p² + q²)`.
pub fn core_geodesic_length(p: i64, q: i64) -> Result<f64, HyperbolicError> {
    if (p as i128).gcd(&(q as i128)) != 1 {
        return Err(HyperbolicError::NotCoprime(p, q));
    }
    let n = (p as i128).pow(2) + (q as i128).pow(2);
    Ok(2.0 * PI / n as f64)
}

/// `(m, n)` with `pn - qm = 1`.
pub fn dual_exponents(p: i64, q: i64) -> Result<(i64, i64), HyperbolicError> {
    let e = (p as i128).extended_gcd(&(q as i128));
    let (m, n) = match e.gcd {
        1 => (-e.y, e.x),
        -1 => (e.y, -e.x),
        _ => return Err(HyperbolicError::NotCoprime(p, q)),
    };
    match (i64::try_from(m), i64::try_from(n)) {
        (Ok(m), Ok(n)) => Ok((m, n)),
        _ => Err(HyperbolicError::NotCoprime(p, q)),
    }
}

/// `ρ_w(α^m β^n)` at `w = p + qi`, where `pn - qm = 1`.
pub fn core_loop(p: i64, q: i64, zeta: Complex64) -> Result<MobiusMap, HyperbolicError> {
    let (m, n) = dual_exponents(p, q)?;
    let fam = filling_family(Some(c(p as f64, q as f64)), zeta)?;
    Ok(fam.a.pow(m).compose(&fam.b.pow(n)))
}

/// `a+bi` with 12 significant digits per part.
pub fn format_complex(z: Complex64) -> String {
    let re = format_real(z.re);
    if z.im == 0.0 {
        return re;
    }
    let im = format_real(z.im.abs());
    let sign = if z.im < 0.0 { '-' } else { '+' };
    format!("{re}{sign}{im}i")
}

/// `%.12g`.
pub fn format_real(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x == 0.0 {
            "0".into()
        } else {
            format!("{x}")
        };
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent form");
    let exp: i32 = exp.parse().expect("integer exponent");
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if !(-4..12).contains(&exp) {
        format!(
            "{}e{}{:02}",
            trim(mantissa),
            if exp < 0 { '-' } else { '+' },
            exp.abs()
        )
    } else {
        trim(&format!("{:.*}", (11 - exp) as usize, x))
    }
}
