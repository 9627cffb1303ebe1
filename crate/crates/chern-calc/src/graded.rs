//! Weighted-graded truncated commutative rings.
//!
//! A `GradedEnv` fixes a table of generators with positive weights and a
//! truncation weight n; a `GradedClass` is an element of the quotient where
//! every monomial of total weight > n is zero. This models the rings the
//! geometry lives in: `Z[H]/(H^(n+1))` with an integration functional, the
//! free ambient ring on Chern generators c_1..c_n and a hypersurface class X,
//! and `Q[h]/(h^n)` on the hypersurface side.
//!
//! Invariants:
//! - every stored monomial has total weight <= the truncation weight;
//! - no zero coefficients are stored;
//! - constants may float free of any environment (`env == None`) and adopt
//!   the other operand's table when combined, so ring identities like
//!   `one * a == a` need no context.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num::BigInt;

use crate::error::{Error, Result};
use crate::ring::Ring;

#[derive(Debug, PartialEq, Eq)]
pub struct GradedEnv {
    gens: Vec<(String, u32)>,
    truncation: u32,
}

impl GradedEnv {
    pub fn new(gens: Vec<(&str, u32)>, truncation: u32) -> Arc<Self> {
        assert!(gens.iter().all(|(_, w)| *w > 0), "generator weights must be positive");
        Arc::new(GradedEnv {
            gens: gens.into_iter().map(|(n, w)| (n.to_string(), w)).collect(),
            truncation,
        })
    }

    /// Single-generator ring `R[g]` truncated above the given weight: the
    /// usual hyperplane-class quotient when the weight is 1.
    pub fn univariate(name: &str, truncation: u32) -> Arc<Self> {
        GradedEnv::new(vec![(name, 1)], truncation)
    }

    pub fn arity(&self) -> usize {
        self.gens.len()
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn generator_names(&self) -> impl Iterator<Item = &str> {
        self.gens.iter().map(|(n, _)| n.as_str())
    }

    fn weight_of(&self, exps: &[u32]) -> u32 {
        exps.iter()
            .zip(self.gens.iter())
            .map(|(e, (_, w))| e * w)
            .sum()
    }

    fn describe(&self) -> String {
        let gens: Vec<String> = self.gens.iter().map(|(n, w)| format!("{n}:{w}")).collect();
        format!("{{{}; weight <= {}}}", gens.join(", "), self.truncation)
    }
}

#[derive(Clone, Debug)]
pub struct GradedClass<C: Ring> {
    env: Option<Arc<GradedEnv>>,
    terms: BTreeMap<Vec<u32>, C>,
}

impl<C: Ring> GradedClass<C> {
    pub fn zero_in(env: &Arc<GradedEnv>) -> Self {
        GradedClass {
            env: Some(env.clone()),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        GradedClass { env: None, terms }
    }

    /// The i-th generator of the table.
    pub fn generator(env: &Arc<GradedEnv>, i: usize) -> Self {
        let mut exps = vec![0; env.arity()];
        exps[i] = 1;
        GradedClass::monomial(env, exps, C::one())
    }

    pub fn monomial(env: &Arc<GradedEnv>, exps: Vec<u32>, c: C) -> Self {
        assert_eq!(exps.len(), env.arity(), "exponent vector arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() && env.weight_of(&exps) <= env.truncation {
            terms.insert(exps, c);
        }
        GradedClass {
            env: Some(env.clone()),
            terms,
        }
    }

    pub fn env(&self) -> Option<&Arc<GradedEnv>> {
        self.env.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &C)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Coefficient of the monomial with the given exponents.
    pub fn coefficient(&self, exps: &[u32]) -> C {
        if self.env.is_none() && exps.iter().all(|e| *e == 0) {
            return self.terms.get(&Vec::new()).cloned().unwrap_or_else(C::zero);
        }
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of g^k in a single-generator environment.
    pub fn univariate_coefficient(&self, k: u32) -> C {
        if k == 0 {
            self.coefficient(&[0])
        } else {
            self.terms.get(&vec![k]).cloned().unwrap_or_else(C::zero)
        }
    }

    fn constant_coefficient(&self) -> C {
        let key = vec![0; self.env.as_ref().map_or(0, |e| e.arity())];
        self.terms.get(&key).cloned().unwrap_or_else(C::zero)
    }

    fn unified_env(&self, rhs: &Self) -> Result<Option<Arc<GradedEnv>>> {
        match (&self.env, &rhs.env) {
            (None, None) => Ok(None),
            (Some(e), None) | (None, Some(e)) => Ok(Some(e.clone())),
            (Some(a), Some(b)) => {
                if Arc::ptr_eq(a, b) || a == b {
                    Ok(Some(a.clone()))
                } else {
                    Err(Error::GeneratorMismatch {
                        left: a.describe(),
                        right: b.describe(),
                    })
                }
            }
        }
    }

    fn aligned_terms(&self, env: &Option<Arc<GradedEnv>>) -> BTreeMap<Vec<u32>, C> {
        let arity = env.as_ref().map_or(0, |e| e.arity());
        self.terms
            .iter()
            .map(|(k, v)| {
                let mut key = k.clone();
                key.resize(arity.max(k.len()), 0);
                (key, v.clone())
            })
            .collect()
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self> {
        let env = self.unified_env(rhs)?;
        let mut terms = self.aligned_terms(&env);
        for (k, v) in rhs.aligned_terms(&env) {
            let entry = terms.entry(k.clone()).or_insert_with(C::zero);
            *entry = entry.add(&v);
            if entry.is_zero() {
                terms.remove(&k);
            }
        }
        Ok(GradedClass { env, terms })
    }

    /// Degree-truncating product: monomials of weight > n are discarded.
    pub fn checked_mul(&self, rhs: &Self) -> Result<Self> {
        let env = self.unified_env(rhs)?;
        let bound = env.as_ref().map(|e| e.truncation());
        let mut terms: BTreeMap<Vec<u32>, C> = BTreeMap::new();
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                let arity = ka.len().max(kb.len());
                let mut key = vec![0u32; arity];
                for (i, slot) in key.iter_mut().enumerate() {
                    *slot = ka.get(i).copied().unwrap_or(0) + kb.get(i).copied().unwrap_or(0);
                }
                if let (Some(env), Some(bound)) = (&env, bound) {
                    key.resize(env.arity(), 0);
                    if env.weight_of(&key) > bound {
                        continue;
                    }
                }
                let prod = va.mul(vb);
                if prod.is_zero() {
                    continue;
                }
                let entry = terms.entry(key.clone()).or_insert_with(C::zero);
                *entry = entry.add(&prod);
                if entry.is_zero() {
                    terms.remove(&key);
                }
            }
        }
        let arity = env.as_ref().map_or(0, |e| e.arity());
        let terms = terms
            .into_iter()
            .map(|(mut k, v)| {
                k.resize(arity.max(k.len()), 0);
                (k, v)
            })
            .collect();
        Ok(GradedClass { env, terms })
    }

    pub fn scale(&self, c: &C) -> Self {
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, v)| {
                let p = v.mul(c);
                (!p.is_zero()).then(|| (k.clone(), p))
            })
            .collect();
        GradedClass {
            env: self.env.clone(),
            terms,
        }
    }

    /// The part of the class in the given total weight.
    pub fn weight_component(&self, w: u32) -> Self {
        let Some(env) = &self.env else {
            return if w == 0 {
                self.clone()
            } else {
                GradedClass::constant(C::zero())
            };
        };
        let terms = self
            .terms
            .iter()
            .filter(|(k, _)| env.weight_of(k) == w)
            .map(|(k, v)| (k.clone(), v.clone()))
            .collect();
        GradedClass {
            env: self.env.clone(),
            terms,
        }
    }

    pub fn max_weight(&self) -> u32 {
        match &self.env {
            None => 0,
            Some(env) => self.terms.keys().map(|k| env.weight_of(k)).max().unwrap_or(0),
        }
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> GradedClass<D> {
        let terms = self
            .terms
            .iter()
            .filter_map(|(k, v)| {
                let w = f(v);
                (!w.is_zero()).then(|| (k.clone(), w))
            })
            .collect();
        GradedClass {
            env: self.env.clone(),
            terms,
        }
    }

    /// Substitutes each generator by the image class with the same index.
    /// The images all live in the target environment.
    pub fn substitute<D: Ring>(&self, images: &[GradedClass<D>], lift: impl Fn(&C) -> D) -> GradedClass<D> {
        let mut acc = GradedClass::constant(D::zero());
        for (exps, coeff) in &self.terms {
            let mut term = GradedClass::constant(lift(coeff));
            for (i, e) in exps.iter().enumerate() {
                for _ in 0..*e {
                    term = term.checked_mul(&images[i]).expect("substitution images share one table");
                }
            }
            acc = acc.checked_add(&term).expect("substitution images share one table");
        }
        acc
    }
}

impl<C: Ring> PartialEq for GradedClass<C> {
    fn eq(&self, other: &Self) -> bool {
        match self.unified_env(other) {
            Err(_) => false,
            Ok(env) => self.aligned_terms(&env) == other.aligned_terms(&env),
        }
    }
}

impl<C: Ring> fmt::Display for GradedClass<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        if let Some(env) = &self.env {
            // weight-major; within a weight, later generators come first,
            // which prints ladders as c2*X - c1*X^2 + X^3
            keys.sort_by_key(|k| {
                let reversed: Vec<u32> = k.iter().rev().copied().collect();
                (env.weight_of(k), reversed)
            });
        }
        let mut first = true;
        for key in keys {
            let coeff = &self.terms[key];
            let mut mono = String::new();
            if let Some(env) = &self.env {
                for (i, e) in key.iter().enumerate() {
                    if *e == 0 {
                        continue;
                    }
                    if !mono.is_empty() {
                        mono.push('*');
                    }
                    mono.push_str(&env.gens[i].0);
                    if *e > 1 {
                        mono.push_str(&format!("^{e}"));
                    }
                }
            }
            let cs = coeff.to_string();
            let compound = cs[1..].contains(['+', '-', ' ', '/']);
            let term = if mono.is_empty() {
                if compound { format!("({cs})") } else { cs }
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else if compound {
                format!("({cs})*{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            if first {
                write!(f, "{term}")?;
                first = false;
            } else if let Some(stripped) = term.strip_prefix('-') {
                write!(f, " - {stripped}")?;
            } else {
                write!(f, " + {term}")?;
            }
        }
        Ok(())
    }
}

impl<C: Ring> Ring for GradedClass<C> {
    fn zero() -> Self {
        GradedClass::constant(C::zero())
    }

    fn one() -> Self {
        GradedClass::constant(C::one())
    }

    fn from_bigint(n: &BigInt) -> Self {
        GradedClass::constant(C::from_bigint(n))
    }

    fn is_zero(&self) -> bool {
        GradedClass::is_zero(self)
    }

    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("generator tables must match")
    }

    fn neg(&self) -> Self {
        GradedClass {
            env: self.env.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v.neg())).collect(),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("generator tables must match")
    }

    /// A class is a unit iff its weight-0 part is; the positive-weight part
    /// is nilpotent, so the inverse is a finite geometric series.
    fn inv(&self) -> Option<Self> {
        let c0 = self.constant_coefficient();
        let c0_inv = c0.inv()?;
        let positive = self.sub(&GradedClass::constant(c0));
        if positive.is_zero() {
            let mut out = GradedClass::constant(c0_inv);
            out.env = self.env.clone();
            return Some(out);
        }
        let env = self.env.clone().expect("positive-weight terms imply an environment");
        let m = positive.scale(&c0_inv).neg();
        let one = GradedClass::one();
        let mut acc = one.clone();
        for _ in 0..env.truncation() {
            acc = one.add(&m.mul(&acc));
        }
        Some(acc.scale(&c0_inv))
    }
}
