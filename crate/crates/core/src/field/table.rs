//! Log/Zech tables for a finite field `F_q`, used by point enumeration and by
//! dense elimination over small extensions.
//!
//! Elements are `u32` handles: `0` is zero and `i + 1` is `g^i` for the
//! primitive generator `g` of the canonical modulus.

use super::{upoly, Field, Scalar};
use crate::error::{Error, Result};

#[derive(Debug)]
pub struct TableField {
    field: Field,
    p: u64,
    q: u64,
    /// `exp[i]` = code of `g^i`, for `0 <= i < q - 1`.
    exp: Vec<u32>,
    /// `log[code]` = handle of the element with that code.
    log: Vec<u32>,
    /// `zech[i]` = handle of `1 + g^i`.
    zech: Vec<u32>,
    minus_one: u32,
}

/// Largest table size we are willing to build.
pub const MAX_TABLE: u64 = 1 << 25;

impl TableField {
    /// Tables for `F_{p^k}` under the canonical modulus.
    pub fn new(p: u64, k: usize) -> Result<Self> {
        let q = (p as u128).pow(k as u32);
        if q > MAX_TABLE as u128 {
            return Err(Error::BudgetExhausted(format!("F{p}^{k} is too large for tables")));
        }
        let q = q as u64;
        let field = Field::galois(p, k)?;
        let (exp, log) = if k == 1 {
            let g = primitive_root(p);
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut log = vec![0u32; q as usize];
            let mut x = 1u64;
            for i in 0..q - 1 {
                exp.push(x as u32);
                log[x as usize] = i as u32 + 1;
                x = upoly::mulmod(x, g, p);
            }
            (exp, log)
        } else {
            let g = field.generator().expect("extension");
            let mut exp = Vec::with_capacity((q - 1) as usize);
            let mut log = vec![0u32; q as usize];
            let mut x = field.one();
            for i in 0..q - 1 {
                let code = field.encode(&x).expect("finite") as usize;
                if log[code] != 0 {
                    return Err(Error::FieldDescriptor(format!("modulus of {field} is not primitive")));
                }
                exp.push(code as u32);
                log[code] = i as u32 + 1;
                x = field.mul(&x, &g);
            }
            (exp, log)
        };
        let mut zech = vec![0u32; (q - 1) as usize];
        for (i, &code) in exp.iter().enumerate() {
            // 1 + g^i: bump the constant digit
            let c0 = code as u64 % p;
            let bumped = code as u64 - c0 + (c0 + 1) % p;
            zech[i] = log[bumped as usize];
        }
        let minus_one = log[(p - 1) as usize];
        Ok(TableField { field, p, q, exp, log, zech, minus_one })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn zero(&self) -> u32 {
        0
    }

    #[inline]
    pub fn one(&self) -> u32 {
        1
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        ((a as u64 - 1 + b as u64 - 1) % n + 1) as u32
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        // a + b = a (1 + b/a)
        let n = self.q - 1;
        let d = (b as u64 + n - a as u64) % n;
        let z = self.zech[d as usize];
        if z == 0 {
            0
        } else {
            self.mul(a, z)
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.mul(a, self.minus_one)
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        assert!(a != 0, "inverse of zero");
        let n = self.q - 1;
        ((n - (a as u64 - 1)) % n + 1) as u32
    }

    /// `a^e`.
    pub fn pow(&self, a: u32, e: u32) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = self.q - 1;
        (((a as u64 - 1) * e as u64) % n + 1) as u32
    }

    /// Handle of the element with base-`p` digit code `code`.
    pub fn from_code(&self, code: u64) -> u32 {
        self.log[code as usize]
    }

    pub fn to_code(&self, a: u32) -> u64 {
        if a == 0 {
            0
        } else {
            self.exp[(a - 1) as usize] as u64
        }
    }

    /// Handle of an element of the prime subfield.
    pub fn prime_element(&self, c: u64) -> u32 {
        self.log[(c % self.p) as usize]
    }

    pub fn to_scalar(&self, a: u32) -> Scalar {
        self.field.decode(self.to_code(a))
    }

    pub fn from_scalar(&self, s: &Scalar) -> Option<u32> {
        self.field.encode(s).map(|c| self.from_code(c))
    }

    /// An embedding of `base` (a finite field of the same characteristic
    /// whose degree divides ours). Returns the image of the base generator
    /// (`None` for a prime base field).
    pub fn embedding(&self, base: &Field) -> Result<Embedding> {
        if base.characteristic() != self.p || base.is_rational() {
            return Err(Error::FieldMismatch { left: base.to_string(), right: self.field.to_string() });
        }
        let k = self.field.degree();
        if !k.is_multiple_of(base.degree()) {
            return Err(Error::FieldMismatch { left: base.to_string(), right: self.field.to_string() });
        }
        let Some(modulus) = base.modulus() else {
            return Ok(Embedding { root: None, base: base.clone() });
        };
        for h in 1..=(self.q - 1) as u32 {
            let mut acc = 0u32;
            for &c in modulus.iter().rev() {
                acc = self.add(self.mul(acc, h), self.prime_element(c));
            }
            if acc == 0 {
                return Ok(Embedding { root: Some(h), base: base.clone() });
            }
        }
        Err(Error::FieldMismatch { left: base.to_string(), right: self.field.to_string() })
    }
}

/// Field embedding `base → table field`, fixed by the image of `a`.
#[derive(Clone, Debug)]
pub struct Embedding {
    root: Option<u32>,
    base: Field,
}

impl Embedding {
    /// Image of the base generator, if the base is an extension.
    pub fn root(&self) -> Option<u32> {
        self.root
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn map(&self, t: &TableField, s: &Scalar) -> u32 {
        match s {
            Scalar::Modular(v) => t.prime_element(*v),
            Scalar::Extension(v) => {
                let r = self.root.expect("extension element needs a root");
                let mut acc = 0u32;
                for &c in v.iter().rev() {
                    acc = t.add(t.mul(acc, r), t.prime_element(c));
                }
                acc
            }
            Scalar::Rational(_) => panic!("rational scalars need reduction first"),
        }
    }
}

fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = upoly::prime_factors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&r| upoly::powmod(g, (p - 1) / r, p) != 1))
        .expect("primitive root exists")
}
