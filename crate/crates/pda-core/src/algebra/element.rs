use std::collections::BTreeSet;

use crate::laurent::Monomial;

/// A coefficient monomial times a word of letters.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term<L = usize> {
    pub coef: Monomial,
    pub word: Vec<L>,
}

impl<L> Term<L> {
    pub fn new(coef: Monomial, word: Vec<L>) -> Self {
        let mut exps = coef.0;
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Term {
            coef: Monomial(exps),
            word,
        }
    }
}

/// A GF(2) linear combination of terms, kept in canonical sorted form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element<L: Ord = usize> {
    terms: BTreeSet<Term<L>>,
}

impl<L: Ord> Default for Element<L> {
    fn default() -> Self {
        Element {
            terms: BTreeSet::new(),
        }
    }
}

impl<L: Ord + Clone> Element<L> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_term(Term::new(Monomial::default(), Vec::new()))
    }

    pub fn letter(l: L) -> Self {
        Self::from_term(Term::new(Monomial::default(), vec![l]))
    }

    pub fn from_term(t: Term<L>) -> Self {
        let mut e = Self::zero();
        e.toggle(t);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = &Term<L>> {
        self.terms.iter()
    }

    pub fn contains(&self, t: &Term<L>) -> bool {
        self.terms.contains(t)
    }

    /// Add a single term (mod 2).
    pub fn toggle(&mut self, t: Term<L>) {
        let t = Term::new(t.coef, t.word);
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn add_assign(&mut self, other: &Element<L>) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    pub fn add(&self, other: &Element<L>) -> Element<L> {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    /// Concatenation product.
    pub fn mul(&self, other: &Element<L>) -> Element<L> {
        let mut out = Element::zero();
        for a in &self.terms {
            for b in &other.terms {
                let mut word = a.word.clone();
                word.extend(b.word.iter().cloned());
                out.toggle(Term::new(a.coef.mul(&b.coef), word));
            }
        }
        out
    }

    pub fn scale(&self, m: &Monomial) -> Element<L> {
        let mut out = Element::zero();
        for t in &self.terms {
            out.toggle(Term::new(t.coef.mul(m), t.word.clone()));
        }
        out
    }

    /// Rewrite every term, dropping those mapped to `None`.
    pub fn filter_map_terms(&self, mut f: impl FnMut(&Term<L>) -> Option<Term<L>>) -> Element<L> {
        let mut out = Element::zero();
        for t in &self.terms {
            if let Some(n) = f(t) {
                out.toggle(n);
            }
        }
        out
    }

    pub fn map_letters<M: Ord + Clone>(&self, mut f: impl FnMut(&L) -> M) -> Element<M> {
        let mut out = Element::zero();
        for t in &self.terms {
            out.toggle(Term::new(t.coef.clone(), t.word.iter().map(&mut f).collect()));
        }
        out
    }
}

impl<L: Ord + Clone> FromIterator<Term<L>> for Element<L> {
    fn from_iter<I: IntoIterator<Item = Term<L>>>(iter: I) -> Self {
        let mut e = Element::zero();
        for t in iter {
            e.toggle(t);
        }
        e
    }
}
