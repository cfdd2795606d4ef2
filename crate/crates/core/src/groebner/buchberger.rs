use crate::poly::{Monomial, MonomialOrder};

use super::sorted::{reduce, Sorted};

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    degree: u64,
}

/// Buchberger state: every polynomial ever added, the indices still in the
/// basis, and the pending critical pairs.
pub(crate) struct Engine<'a> {
    order: &'a MonomialOrder,
    weights: Vec<u64>,
    cap: Option<u64>,
    polys: Vec<Sorted>,
    basis: Vec<usize>,
    pairs: Vec<Pair>,
    pub(crate) discarded: bool,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(order: &'a MonomialOrder, weights: Vec<u64>, cap: Option<u64>) -> Engine<'a> {
        Engine { order, weights, cap, polys: Vec::new(), basis: Vec::new(), pairs: Vec::new(), discarded: false }
    }

    fn over_cap(&self, degree: u64) -> bool {
        self.cap.is_some_and(|c| degree > c)
    }

    /// Reduces `p` against the current basis and inserts it if nonzero.
    pub(crate) fn add(&mut self, p: Sorted) {
        if p.is_zero() {
            return;
        }
        if self.over_cap(p.lm().weighted_degree(&self.weights)) {
            self.discarded = true;
            return;
        }
        let current: Vec<&Sorted> = self.basis.iter().map(|&k| &self.polys[k]).collect();
        let mut h = reduce(p, &current, self.order);
        if h.is_zero() {
            return;
        }
        h.make_monic();
        self.polys.push(h);
        self.update(self.polys.len() - 1);
    }

    /// Gebauer–Möller update for a new element `h`.
    fn update(&mut self, h: usize) {
        let lh = self.polys[h].lm().clone();
        let mut candidates: Vec<(usize, Monomial)> =
            self.basis.iter().map(|&g| (g, lh.lcm(self.polys[g].lm()))).collect();

        // Keep (h, g1) only if coprime or no other pair with h has an lcm dividing it.
        let mut kept: Vec<(usize, Monomial)> = Vec::new();
        while let Some((g1, l1)) = candidates.pop() {
            let coprime = lh.is_coprime(self.polys[g1].lm());
            if coprime
                || (!candidates.iter().any(|(_, l2)| l2.divides(&l1)) && !kept.iter().any(|(_, l2)| l2.divides(&l1)))
            {
                kept.push((g1, l1));
            }
        }
        let fresh: Vec<Pair> = kept
            .into_iter()
            .filter(|(g, _)| !lh.is_coprime(self.polys[*g].lm()))
            .map(|(g, l)| Pair { i: g, j: h, degree: l.weighted_degree(&self.weights), lcm: l })
            .collect();

        let polys = &self.polys;
        self.pairs.retain(|p| {
            !lh.divides(&p.lcm)
                || lh.lcm(polys[p.i].lm()) == p.lcm
                || lh.lcm(polys[p.j].lm()) == p.lcm
        });
        for p in fresh {
            if self.over_cap(p.degree) {
                self.discarded = true;
            } else {
                self.pairs.push(p);
            }
        }
        self.basis.retain(|&g| !lh.divides(polys[g].lm()));
        self.basis.push(h);
    }

    fn select(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.degree
                .cmp(&q.degree)
                .then_with(|| order.cmp(&p.lcm, &q.lcm))
                .then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    pub(crate) fn run(&mut self) {
        while let Some(pair) = self.select() {
            let s = Sorted::spoly(&self.polys[pair.i], &self.polys[pair.j], self.order);
            self.add(s);
        }
    }

    /// The final basis, minimal and inter-reduced, sorted ascending by leading monomial.
    pub(crate) fn into_reduced(self) -> Vec<Sorted> {
        let order = self.order;
        let mut polys = self.polys;
        let mut g: Vec<Sorted> = self.basis.iter().map(|&k| std::mem::replace(&mut polys[k], Sorted { terms: Vec::new() })).collect();
        g.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
        interreduce(g, order)
    }
}

/// Tail-reduces each element of a minimal monic basis by the others.
pub(crate) fn interreduce(g: Vec<Sorted>, order: &MonomialOrder) -> Vec<Sorted> {
    let mut out = Vec::with_capacity(g.len());
    for (k, p) in g.iter().enumerate() {
        let others: Vec<&Sorted> = g.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, q)| q).collect();
        let mut terms = p.terms.clone();
        let lead = terms.pop().unwrap();
        let mut tail = reduce(Sorted { terms }, &others, order);
        tail.terms.push(lead);
        out.push(tail);
    }
    out
}

/// Drops elements whose leading monomial is divisible by another's, then
/// makes the rest monic and sorts them.
pub(crate) fn minimalize(mut g: Vec<Sorted>, order: &MonomialOrder) -> Vec<Sorted> {
    g.retain(|p| !p.is_zero());
    for p in &mut g {
        p.make_monic();
    }
    g.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    g.dedup_by(|a, b| a.lm() == b.lm());
    let mut out: Vec<Sorted> = Vec::new();
    for p in g {
        if !out.iter().any(|q| q.lm().divides(p.lm())) {
            out.push(p);
        }
    }
    out
}
