//! Sparse multivariate polynomials over a generic coefficient ring.
//!
//! A polynomial carries an ordered variable list (shared via `Arc`) and a
//! map from exponent vectors to nonzero coefficients. Exponent vectors
//! always have the arity of the variable list. The canonical term order for
//! display is: total degree descending, ties broken by ascending
//! lexicographic comparison of exponent vectors over the declared variable
//! list. That order is what the golden-file serializations freeze.

use crate::ring::{ArithError, Coeff, ExactDiv, Field, Ring};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

/// Ordered list of named indeterminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Arc<VarSet> {
        Arc::new(VarSet {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        })
    }

    /// Variables a_0..a_m followed by any extra names.
    pub fn coeff_vars(m: usize, extra: &[&str]) -> Arc<VarSet> {
        let mut names: Vec<String> = (0..=m).map(|i| format!("a{i}")).collect();
        names.extend(extra.iter().map(|s| s.to_string()));
        Arc::new(VarSet { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.names[idx]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// New set with one more variable appended.
    pub fn extended(&self, name: &str) -> Arc<VarSet> {
        let mut names = self.names.clone();
        names.push(name.to_string());
        Arc::new(VarSet { names })
    }
}

type Expo = Vec<u16>;

#[derive(Clone)]
pub struct MPoly<C> {
    vars: Arc<VarSet>,
    terms: BTreeMap<Expo, C>,
}

impl<C: PartialEq> PartialEq for MPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        if self.terms.is_empty() && other.terms.is_empty() {
            return true; // zero is zero over any variable list
        }
        // Constants compare by value regardless of the variable list.
        let const_key = |p: &Self| {
            p.terms.len() == 1 && p.terms.keys().all(|e| e.iter().all(|&x| x == 0))
        };
        if const_key(self) && const_key(other) {
            return self.terms.values().eq(other.terms.values());
        }
        self.vars == other.vars && self.terms == other.terms
    }
}

impl<C: Eq> Eq for MPoly<C> {}

impl<C: Ring> MPoly<C> {
    pub fn zero_over(vars: &Arc<VarSet>) -> Self {
        MPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<VarSet>, c: C) -> Self {
        let mut p = Self::zero_over(vars);
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one_over(vars: &Arc<VarSet>) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn var(vars: &Arc<VarSet>, idx: usize) -> Self {
        assert!(idx < vars.len(), "variable index out of range");
        let mut e = vec![0u16; vars.len()];
        e[idx] = 1;
        let mut p = Self::zero_over(vars);
        p.terms.insert(e, C::one());
        p
    }

    pub fn var_named(vars: &Arc<VarSet>, name: &str) -> Self {
        let idx = vars.index_of(name).unwrap_or_else(|| panic!("unknown variable {name}"));
        Self::var(vars, idx)
    }

    pub fn monomial(vars: &Arc<VarSet>, expo: &[u16], c: C) -> Self {
        assert_eq!(expo.len(), vars.len());
        let mut p = Self::zero_over(vars);
        if !c.is_zero() {
            p.terms.insert(expo.to_vec(), c);
        }
        p
    }

    pub fn vars(&self) -> &Arc<VarSet> {
        &self.vars
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&Expo, &C)> {
        self.terms.iter()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn constant_term(&self) -> C {
        self.terms
            .get(&vec![0u16; self.vars.len()])
            .cloned()
            .unwrap_or_else(C::zero)
    }

    /// The constant value if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn degree_in(&self, idx: usize) -> usize {
        self.terms.keys().map(|e| e[idx] as usize).max().unwrap_or(0)
    }

    /// Total degree of every term, if they all agree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum());
        let first: usize = it.next()?;
        if it.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }

    fn assert_same_vars(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars,
            "polynomial arithmetic across different variable lists"
        );
    }

    fn insert_add(terms: &mut BTreeMap<Expo, C>, e: Expo, c: C) {
        if c.is_zero() {
            return;
        }
        match terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn scaled(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero_over(&self.vars);
        }
        let mut out = Self::zero_over(&self.vars);
        for (e, x) in &self.terms {
            Self::insert_add(&mut out.terms, e.clone(), x.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one_over(&self.vars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base.clone();
            }
            base = base.clone() * base.clone();
            e >>= 1;
        }
        result
    }

    /// Coefficient of `var^k` as a polynomial over the same variable list
    /// (the extracted variable's exponent is zeroed).
    pub fn coeff_of_power(&self, idx: usize, k: u16) -> Self {
        let mut out = Self::zero_over(&self.vars);
        for (e, c) in &self.terms {
            if e[idx] == k {
                let mut e2 = e.clone();
                e2[idx] = 0;
                Self::insert_add(&mut out.terms, e2, c.clone());
            }
        }
        out
    }

    /// All coefficients of powers of one variable, lowest power first.
    pub fn coeffs_in(&self, idx: usize) -> Vec<Self> {
        let d = self.degree_in(idx);
        (0..=d as u16).map(|k| self.coeff_of_power(idx, k)).collect()
    }

    /// Remove an unused variable from the list.
    pub fn drop_var(&self, idx: usize) -> Self {
        assert_eq!(self.degree_in(idx), 0, "cannot drop a used variable");
        let names: Vec<&String> = self
            .vars
            .names()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != idx)
            .map(|(_, n)| n)
            .collect();
        let vars = VarSet::new(&names);
        let mut out = MPoly::zero_over(&vars);
        for (e, c) in &self.terms {
            let mut e2 = e.clone();
            e2.remove(idx);
            out.terms.insert(e2, c.clone());
        }
        out
    }

    /// Re-embed into a larger variable list; `position[i]` is the index of
    /// this polynomial's i-th variable in `vars`. Constants over the empty
    /// list (from `Zero::zero` / `One::one`) lift to any list.
    pub fn embed(&self, vars: &Arc<VarSet>, position: &[usize]) -> Self {
        if self.vars.is_empty() && !vars.is_empty() {
            return Self::constant(vars, self.constant_term());
        }
        assert_eq!(position.len(), self.vars.len());
        let mut out = MPoly::zero_over(vars);
        for (e, c) in &self.terms {
            let mut e2 = vec![0u16; vars.len()];
            for (i, &x) in e.iter().enumerate() {
                e2[position[i]] = x;
            }
            out.terms.insert(e2, c.clone());
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly::zero_over(&self.vars);
        for (e, c) in &self.terms {
            let d = f(c);
            if !d.is_zero() {
                out.terms.insert(e.clone(), d);
            }
        }
        out
    }

    /// Full evaluation; `values` must cover every variable.
    pub fn eval(&self, values: &[C]) -> C {
        assert_eq!(values.len(), self.vars.len());
        // Cache powers per variable.
        let mut pows: Vec<Vec<C>> = values.iter().map(|v| vec![C::one(), v.clone()]).collect();
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                while pows[i].len() <= x as usize {
                    let last = pows[i].last().unwrap().clone();
                    pows[i].push(last * values[i].clone());
                }
                t = t * pows[i][x as usize].clone();
            }
            acc = acc + t;
        }
        acc
    }

    /// Substitute a polynomial for one variable.
    pub fn subst(&self, idx: usize, value: &Self) -> Self {
        self.assert_same_vars(value);
        let parts = self.coeffs_in(idx);
        let mut acc = Self::zero_over(&self.vars);
        // Horner from the top power down.
        for part in parts.into_iter().rev() {
            acc = acc * value.clone() + part;
        }
        acc
    }

    /// Substitute scalars for a subset of variables.
    pub fn eval_partial(&self, bindings: &[(usize, C)]) -> Self {
        let mut out = Self::zero_over(&self.vars);
        for (e, c) in &self.terms {
            let mut coeff = c.clone();
            let mut e2 = e.clone();
            for (idx, v) in bindings {
                for _ in 0..e[*idx] {
                    coeff = coeff * v.clone();
                }
                e2[*idx] = 0;
            }
            Self::insert_add(&mut out.terms, e2, coeff);
        }
        out
    }

    /// Leading term in the canonical order (total degree, then reverse lex).
    fn lead_expo(&self) -> Option<&Expo> {
        self.terms.keys().max_by(|a, b| Self::cmp_expo(a, b))
    }

    fn cmp_expo(a: &Expo, b: &Expo) -> std::cmp::Ordering {
        let da: usize = a.iter().map(|&x| x as usize).sum();
        let db: usize = b.iter().map(|&x| x as usize).sum();
        // Higher total degree is larger; within a degree the canonical
        // display order puts lexicographically smaller vectors first, so
        // "larger" here means lexicographically smaller.
        da.cmp(&db).then_with(|| b.cmp(a))
    }

    /// Terms in canonical display order.
    pub fn sorted_terms(&self) -> Vec<(&Expo, &C)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|x, y| Self::cmp_expo(y.0, x.0));
        v
    }
}

impl<C: Ring> Zero for MPoly<C> {
    /// The zero polynomial over an empty variable list; mostly useful via
    /// `zero_over`. Arithmetic lifts it to the other operand's list.
    fn zero() -> Self {
        MPoly { vars: VarSet::new::<&str>(&[]), terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Ring> One for MPoly<C> {
    fn one() -> Self {
        let vars = VarSet::new::<&str>(&[]);
        MPoly::constant(&vars, C::one())
    }
    fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }
}

/// Lift nullary constants (from `Zero::zero`/`One::one`) to a variable list.
fn coerce<C: Ring>(a: MPoly<C>, vars: &Arc<VarSet>) -> MPoly<C> {
    if a.vars.is_empty() && !vars.is_empty() {
        MPoly::constant(vars, a.constant_term())
    } else {
        a
    }
}

impl<C: Ring> Add for MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: Self) -> Self {
        let vars = if self.vars.is_empty() { rhs.vars.clone() } else { self.vars.clone() };
        let a = coerce(self, &vars);
        let b = coerce(rhs, &vars);
        a.assert_same_vars(&b);
        let mut out = a;
        for (e, c) in b.terms {
            MPoly::insert_add(&mut out.terms, e, c);
        }
        out
    }
}

impl<C: Ring> Sub for MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Ring> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<C: Ring> Mul for MPoly<C> {
    type Output = MPoly<C>;
    // Exponent vectors add under multiplication.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let vars = if self.vars.is_empty() { rhs.vars.clone() } else { self.vars.clone() };
        let a = coerce(self, &vars);
        let b = coerce(rhs, &vars);
        a.assert_same_vars(&b);
        let mut out = MPoly::zero_over(&a.vars);
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Expo = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                MPoly::insert_add(&mut out.terms, e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl<C: Ring + ExactDiv> ExactDiv for MPoly<C> {
    /// Exact multivariate division (the divisor is known to divide).
    fn exact_div(&self, rhs: &Self) -> Self {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        if let Some(c) = rhs.as_constant() {
            return self.map_coeffs(|x| x.exact_div(&c));
        }
        let mut rem = self.clone();
        let mut quot = MPoly::zero_over(&self.vars);
        let lead_d = rhs.lead_expo().unwrap().clone();
        let lead_dc = rhs.terms[&lead_d].clone();
        while !rem.is_zero() {
            let lead_r = rem.lead_expo().unwrap().clone();
            let lead_rc = rem.terms[&lead_r].clone();
            let e: Expo = lead_r
                .iter()
                .zip(&lead_d)
                .map(|(a, b)| a.checked_sub(*b).expect("inexact polynomial division"))
                .collect();
            let c = lead_rc.exact_div(&lead_dc);
            let t = MPoly::monomial(&self.vars, &e, c);
            rem = rem - t.clone() * rhs.clone();
            quot = quot + t;
        }
        quot
    }
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.sorted_terms() {
            let (neg, text) = c.term_text();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut mono = String::new();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(self.vars.name(i));
                if x > 1 {
                    mono.push_str(&format!("^{x}"));
                }
            }
            match (text.is_empty(), mono.is_empty()) {
                (true, true) => write!(f, "1")?,
                (true, false) => write!(f, "{mono}")?,
                (false, true) => write!(f, "{text}")?,
                (false, false) => write!(f, "{text}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Convenience: evaluate an integer polynomial into any ring.
pub fn lift_int_poly<C: Ring + From<i64>>(p: &MPoly<crate::Integer>) -> MPoly<C> {
    p.map_coeffs(|c| {
        use num_traits::ToPrimitive;
        C::from(c.to_i64().expect("coefficient too large for lift"))
    })
}

impl<C: Ring> MPoly<C> {
    /// Exact division check error helper used by callers that prefer
    /// a `Result` over a panic.
    pub fn try_div_exact(&self, rhs: &Self) -> Result<Self, ArithError>
    where
        C: ExactDiv,
    {
        if rhs.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(self.exact_div(rhs))
    }

    /// Evaluate with a field of scalar bindings given by variable name.
    pub fn eval_named(&self, bindings: &[(&str, C)]) -> Self {
        let resolved: Vec<(usize, C)> = bindings
            .iter()
            .map(|(n, v)| {
                (
                    self.vars.index_of(n).unwrap_or_else(|| panic!("unknown variable {n}")),
                    v.clone(),
                )
            })
            .collect();
        self.eval_partial(&resolved)
    }
}

impl<C: Field> MPoly<C> {
    pub fn div_scalar_usize(&self, k: usize) -> Self {
        self.map_coeffs(|c| c.div_usize(k).expect("nonzero integer divisor"))
    }
}
