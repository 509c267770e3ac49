//! Semidirect products `F ⋊ Q` of a free group by a group acting on it.
//!
//! An element `(f, t)` stands for the product `f · t`. The action is the
//! right action by conjugation, `act_by(u, f) = u⁻¹ f u`, so that
//!
//! ```text
//! (f₁, t₁)(f₂, t₂) = (f₁ · act_by(t₁⁻¹, f₂), t₁ t₂)
//! ```
//!
//! and a quotient word acts letter by letter from the left.

use std::fmt::Debug;
use std::hash::Hash;

use serde::Serialize;

use crate::error::Result;
use crate::freegrp::FreeWord;
use crate::words::Letter;

/// A quotient group acting on a free group by automorphisms given on
/// generators.
pub trait Action {
    type Symbol: Clone + Eq + Ord + Hash + Debug;
    type Quotient: Clone + PartialEq + Debug;

    fn quotient_identity(&self) -> Self::Quotient;
    fn quotient_multiply(&self, a: &Self::Quotient, b: &Self::Quotient) -> Result<Self::Quotient>;
    fn quotient_inverse(&self, a: &Self::Quotient) -> Self::Quotient;
    /// The letters of a quotient element, in the order they act.
    fn quotient_letters(&self, a: &Self::Quotient) -> Vec<Letter>;

    /// Image of a kernel generator under one quotient letter.
    fn act(&self, letter: Letter, symbol: &Self::Symbol) -> FreeWord<Self::Symbol>;

    fn render_symbol(&self, symbol: &Self::Symbol) -> String;
    fn render_quotient(&self, q: &Self::Quotient) -> String;

    fn act_on_word(&self, letter: Letter, word: &FreeWord<Self::Symbol>) -> FreeWord<Self::Symbol> {
        word.substitute(|s| self.act(letter, s))
    }

    fn act_by(&self, q: &Self::Quotient, word: &FreeWord<Self::Symbol>) -> FreeWord<Self::Symbol> {
        self.quotient_letters(q)
            .into_iter()
            .fold(word.clone(), |w, letter| self.act_on_word(letter, &w))
    }

    fn render_kernel(&self, word: &FreeWord<Self::Symbol>) -> String {
        word.render(|s| self.render_symbol(s))
    }
}

/// `kernel · quotient`, both components in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectElement<S, Q> {
    pub kernel: FreeWord<S>,
    pub quotient: Q,
}

pub type ElementOf<A> = SemidirectElement<<A as Action>::Symbol, <A as Action>::Quotient>;

pub fn identity<A: Action>(action: &A) -> ElementOf<A> {
    SemidirectElement {
        kernel: FreeWord::identity(),
        quotient: action.quotient_identity(),
    }
}

pub fn kernel_element<A: Action>(action: &A, kernel: FreeWord<A::Symbol>) -> ElementOf<A> {
    SemidirectElement {
        kernel,
        quotient: action.quotient_identity(),
    }
}

pub fn quotient_element<A: Action>(quotient: A::Quotient) -> ElementOf<A> {
    SemidirectElement {
        kernel: FreeWord::identity(),
        quotient,
    }
}

pub fn multiply<A: Action>(action: &A, x: &ElementOf<A>, y: &ElementOf<A>) -> Result<ElementOf<A>> {
    let moved = action.act_by(&action.quotient_inverse(&x.quotient), &y.kernel);
    Ok(SemidirectElement {
        kernel: x.kernel.mul(&moved),
        quotient: action.quotient_multiply(&x.quotient, &y.quotient)?,
    })
}

/// `(f, t)⁻¹ = (act_by(t, f⁻¹), t⁻¹)`.
pub fn inverse<A: Action>(action: &A, x: &ElementOf<A>) -> ElementOf<A> {
    SemidirectElement {
        kernel: action.act_by(&x.quotient, &x.kernel.inverse()),
        quotient: action.quotient_inverse(&x.quotient),
    }
}

pub fn is_identity<A: Action>(action: &A, x: &ElementOf<A>) -> bool {
    x.kernel.is_identity() && x.quotient == action.quotient_identity()
}

/// `x y x⁻¹ y⁻¹`.
pub fn commutator<A: Action>(action: &A, x: &ElementOf<A>, y: &ElementOf<A>) -> Result<ElementOf<A>> {
    let xy = multiply(action, x, y)?;
    let xyx = multiply(action, &xy, &inverse(action, x))?;
    multiply(action, &xyx, &inverse(action, y))
}

pub fn render<A: Action>(action: &A, x: &ElementOf<A>) -> String {
    format!(
        "({}, {})",
        action.render_kernel(&x.kernel),
        action.render_quotient(&x.quotient)
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorOutcome {
    pub relator: String,
    pub trivial: bool,
    pub image: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelatorReport {
    pub relators: Vec<RelatorOutcome>,
    pub all_trivial: bool,
}

/// Evaluates the commutator `[u, v]` of every listed generator pair under
/// `image` and records whether it is trivial.
pub fn check_relators<A: Action>(
    action: &A,
    pairs: &[(String, ElementOf<A>, String, ElementOf<A>)],
) -> Result<RelatorReport> {
    let mut relators = Vec::with_capacity(pairs.len());
    for (u_name, u, v_name, v) in pairs {
        let value = commutator(action, u, v)?;
        relators.push(RelatorOutcome {
            relator: format!("[{u_name},{v_name}]"),
            trivial: is_identity(action, &value),
            image: render(action, &value),
        });
    }
    let all_trivial = relators.iter().all(|r| r.trivial);
    Ok(RelatorReport { relators, all_trivial })
}

/// An action with the image of one `(letter, symbol)` pair replaced, used to
/// confirm that the verification checks notice a corrupted table.
pub struct Mutated<'a, A: Action> {
    pub inner: &'a A,
    pub overrides: Vec<(Letter, A::Symbol, FreeWord<A::Symbol>)>,
}

impl<'a, A: Action> Mutated<'a, A> {
    /// Exchanges the images of `symbol` under the letters `first` and
    /// `second`, and likewise under their inverses.
    pub fn swap(inner: &'a A, symbol: A::Symbol, first: Letter, second: Letter) -> Self {
        let mut overrides = Vec::with_capacity(4);
        for (x, y) in [(first, second), (first.inverted(), second.inverted())] {
            overrides.push((x, symbol.clone(), inner.act(y, &symbol)));
            overrides.push((y, symbol.clone(), inner.act(x, &symbol)));
        }
        Mutated { inner, overrides }
    }
}

impl<A: Action> Action for Mutated<'_, A> {
    type Symbol = A::Symbol;
    type Quotient = A::Quotient;

    fn quotient_identity(&self) -> Self::Quotient {
        self.inner.quotient_identity()
    }

    fn quotient_multiply(&self, a: &Self::Quotient, b: &Self::Quotient) -> Result<Self::Quotient> {
        self.inner.quotient_multiply(a, b)
    }

    fn quotient_inverse(&self, a: &Self::Quotient) -> Self::Quotient {
        self.inner.quotient_inverse(a)
    }

    fn quotient_letters(&self, a: &Self::Quotient) -> Vec<Letter> {
        self.inner.quotient_letters(a)
    }

    fn act(&self, letter: Letter, symbol: &Self::Symbol) -> FreeWord<Self::Symbol> {
        self.overrides
            .iter()
            .find(|(l, s, _)| *l == letter && s == symbol)
            .map(|(_, _, w)| w.clone())
            .unwrap_or_else(|| self.inner.act(letter, symbol))
    }

    fn render_symbol(&self, symbol: &Self::Symbol) -> String {
        self.inner.render_symbol(symbol)
    }

    fn render_quotient(&self, q: &Self::Quotient) -> String {
        self.inner.render_quotient(q)
    }
}
