//! 3,4-SAT formulas, a small DPLL solver, and the two reductions to
//! biclique-Helly recognition.

use std::fmt::Write;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::text::{data_lines, numbers};
use crate::Graph;

/// Largest variable count accepted by [`solve_sat`].
pub const SAT_VARIABLE_CAP: usize = 40;

/// A CNF formula with exactly three distinct literals per clause, no clause
/// holding a literal and its negation, and every variable in at most four
/// clauses. Literals are nonzero signed 1-based variable indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sat34Formula {
    nv: usize,
    clauses: Vec<[i32; 3]>,
}

impl Sat34Formula {
    pub fn new(nv: usize, clauses: Vec<[i32; 3]>) -> Result<Self> {
        let mut occurrences = vec![0usize; nv + 1];
        for (i, c) in clauses.iter().enumerate() {
            for (j, &l) in c.iter().enumerate() {
                let v = l.unsigned_abs() as usize;
                if l == 0 || v > nv {
                    return Err(Error::invalid(format!("clause {}: literal {l} is outside 1..={nv}", i + 1)));
                }
                if c[..j].iter().any(|&o| o.abs() == l.abs()) {
                    return Err(Error::invalid(format!("clause {}: variable {v} appears twice", i + 1)));
                }
                occurrences[v] += 1;
                if occurrences[v] > 4 {
                    return Err(Error::invalid(format!("variable {v} occurs in more than four clauses")));
                }
            }
        }
        Ok(Sat34Formula { nv, clauses })
    }

    pub fn variables(&self) -> usize {
        self.nv
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// Parses `nv m` followed by `m` lines of three literals.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = data_lines(text);
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header `nv m`"))?;
        let head: Vec<usize> = numbers(hl, header)?;
        let [nv, m] = head[..] else { return Err(Error::parse(hl, "header must be `nv m`")) };
        let mut clauses = Vec::with_capacity(m);
        for (ln, line) in lines {
            let lits: Vec<i32> = numbers(ln, line)?;
            let [a, b, c] = lits[..] else { return Err(Error::parse(ln, "a clause has exactly three literals")) };
            clauses.push([a, b, c]);
        }
        if clauses.len() != m {
            return Err(Error::parse(hl, format!("header announces {m} clauses, found {}", clauses.len())));
        }
        Self::new(nv, clauses)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.nv, self.clauses.len());
        for [a, b, c] in &self.clauses {
            let _ = writeln!(s, "{a} {b} {c}");
        }
        s
    }

    pub fn is_satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0)))
    }
}

/// A satisfying assignment (indexed by variable minus one), found by DPLL
/// with unit propagation.
pub fn solve_sat(f: &Sat34Formula) -> Result<Option<Vec<bool>>> {
    if f.nv > SAT_VARIABLE_CAP {
        return Err(Error::BudgetExceeded(format!("{} variables exceed the solver cap of {SAT_VARIABLE_CAP}", f.nv)));
    }
    fn value(assign: &[Option<bool>], l: i32) -> Option<bool> {
        assign[l.unsigned_abs() as usize - 1].map(|b| b == (l > 0))
    }
    fn dpll(clauses: &[[i32; 3]], assign: &mut Vec<Option<bool>>) -> bool {
        let mut forced = Vec::new();
        loop {
            let mut unit = None;
            for c in clauses {
                if c.iter().any(|&l| value(assign, l) == Some(true)) {
                    continue;
                }
                let open: Vec<i32> = c.iter().copied().filter(|&l| value(assign, l).is_none()).collect();
                match open[..] {
                    [] => {
                        for v in forced {
                            assign[v] = None;
                        }
                        return false;
                    }
                    [l] => {
                        unit = Some(l);
                        break;
                    }
                    _ => {}
                }
            }
            let Some(l) = unit else { break };
            let v = l.unsigned_abs() as usize - 1;
            assign[v] = Some(l > 0);
            forced.push(v);
        }
        let Some(v) = assign.iter().position(Option::is_none) else { return true };
        for b in [true, false] {
            assign[v] = Some(b);
            if dpll(clauses, assign) {
                return true;
            }
        }
        assign[v] = None;
        for v in forced {
            assign[v] = None;
        }
        false
    }
    let mut assign = vec![None; f.nv];
    Ok(dpll(&f.clauses, &mut assign).then(|| assign.into_iter().map(|b| b.unwrap_or(false)).collect()))
}

/// A random 3,4-SAT formula with `m` clauses over `nv` variables. Draws are
/// rejected, never repaired, until the occurrence bound holds.
pub fn random_sat34<R: Rng>(nv: usize, m: usize, rng: &mut R) -> Result<Sat34Formula> {
    if nv < 3 || 3 * m > 4 * nv {
        return Err(Error::invalid(format!("{m} clauses cannot fit over {nv} variables")));
    }
    let vars: Vec<i32> = (1..=nv as i32).collect();
    for _ in 0..100_000 {
        let clauses: Vec<[i32; 3]> = (0..m)
            .map(|_| {
                let pick: Vec<i32> = vars.choose_multiple(rng, 3).copied().collect();
                let sign = |v: i32, rng: &mut R| if rng.gen_bool(0.5) { v } else { -v };
                [sign(pick[0], rng), sign(pick[1], rng), sign(pick[2], rng)]
            })
            .collect();
        if let Ok(f) = Sat34Formula::new(nv, clauses) {
            return Ok(f);
        }
    }
    Err(Error::BudgetExceeded("no valid formula after 100000 draws".into()))
}

/// A reduction graph with its parameters and vertex names.
#[derive(Clone, Debug)]
pub struct SatGadget {
    pub graph: Graph,
    pub p: usize,
    pub q: usize,
    pub names: Vec<String>,
}

fn negates(a: i32, b: i32) -> bool {
    a == -b
}

/// The reduction for unbounded `p`: clique `Y = {y_i}`, triangles
/// `U_i = {u_{i,a}}`, stable `Q` of `q - 1` vertices; `y_i` is complete to
/// every `U_j` with `j != i`, literal vertices of different clauses are
/// adjacent exactly when their literals are complementary, and `Q` is
/// complete to `U`. With `p = m - 1`, the formula is satisfiable exactly
/// when the graph is not `(p,q)`-biclique-Helly (for `m >= 7`).
pub fn sat_to_biclique_gadget_p(f: &Sat34Formula, q: usize, allow_small: bool) -> Result<SatGadget> {
    let m = f.clauses.len();
    if q == 0 {
        return Err(Error::invalid("q must be positive"));
    }
    if m < 7 && !allow_small {
        return Err(Error::invalid(format!("the reduction needs at least 7 clauses, got {m}")));
    }
    if m == 0 {
        return Err(Error::invalid("the formula has no clauses"));
    }
    let y = |i: usize| i as u32;
    let u = |i: usize, a: usize| (m + 3 * i + a) as u32;
    let qv = |j: usize| (4 * m + j) as u32;
    let n = 4 * m + q - 1;
    let mut edges = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            edges.push((y(i), y(j)));
        }
        for a in 0..3 {
            for b in a + 1..3 {
                edges.push((u(i, a), u(i, b)));
            }
        }
        for j in 0..m {
            if j != i {
                edges.extend((0..3).map(|a| (y(i), u(j, a))));
            }
            if j > i {
                for a in 0..3 {
                    for b in 0..3 {
                        if negates(f.clauses[i][a], f.clauses[j][b]) {
                            edges.push((u(i, a), u(j, b)));
                        }
                    }
                }
            }
        }
        for k in 0..q - 1 {
            edges.extend((0..3).map(|a| (u(i, a), qv(k))));
        }
    }
    let mut names: Vec<String> = (1..=m).map(|i| format!("y{i}")).collect();
    names.extend((1..=m).flat_map(|i| (1..=3).map(move |a| format!("u{i}_{a}"))));
    names.extend((1..q).map(|j| format!("q{j}")));
    Ok(SatGadget { graph: Graph::new(n, &edges)?, p: m - 1, q, names })
}

/// The reduction for unbounded `q`: clique `X`, stable `Y` (both of size
/// `p + 1`, with `x_i ~ y_j` iff `i != j`), and stable blocks `U_{i,a}` of
/// `p + 1` false twins each; the three blocks of a clause are mutually
/// complete, blocks of different clauses are complete exactly when their
/// literals are complementary, `U` is complete to `X` and anticomplete to
/// `Y`. With `q = m(p+1) + 1`, the formula is satisfiable exactly when the
/// graph is not `(p,q)`-biclique-Helly (for `m >= 6`).
pub fn sat_to_biclique_gadget_q(f: &Sat34Formula, p: usize, allow_small: bool) -> Result<SatGadget> {
    let m = f.clauses.len();
    if p == 0 {
        return Err(Error::invalid("p must be positive"));
    }
    if m < 6 && !allow_small {
        return Err(Error::invalid(format!("the reduction needs at least 6 clauses, got {m}")));
    }
    if m == 0 {
        return Err(Error::invalid("the formula has no clauses"));
    }
    let k = p + 1;
    let x = |i: usize| i as u32;
    let yv = |i: usize| (k + i) as u32;
    let block = |i: usize, a: usize| (2 * k + (3 * i + a) * k) as u32..(2 * k + (3 * i + a + 1) * k) as u32;
    let n = (3 * m + 2) * k;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            if j > i {
                edges.push((x(i), x(j)));
            }
            if j != i {
                edges.push((x(i), yv(j)));
            }
        }
    }
    let complete = |edges: &mut Vec<(u32, u32)>, a: std::ops::Range<u32>, b: std::ops::Range<u32>| {
        for s in a {
            edges.extend(b.clone().map(|t| (s, t)));
        }
    };
    for i in 0..m {
        for a in 0..3 {
            complete(&mut edges, block(i, a), 0..k as u32);
            for b in a + 1..3 {
                complete(&mut edges, block(i, a), block(i, b));
            }
            for j in i + 1..m {
                for b in 0..3 {
                    if negates(f.clauses[i][a], f.clauses[j][b]) {
                        complete(&mut edges, block(i, a), block(j, b));
                    }
                }
            }
        }
    }
    let mut names: Vec<String> = (1..=k).map(|i| format!("x{i}")).collect();
    names.extend((1..=k).map(|i| format!("y{i}")));
    for i in 1..=m {
        for a in 1..=3 {
            names.extend((1..=k).map(|t| format!("u{i}_{a}_{t}")));
        }
    }
    Ok(SatGadget { graph: Graph::new(n, &edges)?, p, q: m * k + 1, names })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn truth_table(f: &Sat34Formula) -> bool {
        (0u32..1 << f.variables()).any(|mask| {
            let a: Vec<bool> = (0..f.variables()).map(|v| mask >> v & 1 == 1).collect();
            f.is_satisfied_by(&a)
        })
    }

    #[test]
    fn validation_and_text() {
        assert!(Sat34Formula::new(3, vec![[1, -1, 2]]).is_err());
        assert!(Sat34Formula::new(3, vec![[1, 2, 4]]).is_err());
        let five = vec![[1, 2, 3]; 5];
        assert!(Sat34Formula::new(3, five).is_err());
        let f = Sat34Formula::new(4, vec![[1, -2, 3], [-1, 2, 4]]).unwrap();
        assert_eq!(Sat34Formula::parse(&f.to_text()).unwrap(), f);
        assert!(Sat34Formula::parse("3 2\n1 2 3\n").is_err());
    }

    #[test]
    fn solver_matches_truth_table() {
        assert_eq!(solve_sat(&Sat34Formula::new(0, vec![]).unwrap()).unwrap(), Some(vec![]));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let nv = rng.gen_range(3..=6);
            let m = rng.gen_range(1..=4 * nv / 3);
            let f = random_sat34(nv, m, &mut rng).unwrap();
            let got = solve_sat(&f).unwrap();
            assert_eq!(got.is_some(), truth_table(&f));
            if let Some(a) = got {
                assert!(f.is_satisfied_by(&a));
            }
        }
        assert!(solve_sat(&Sat34Formula::new(41, vec![]).unwrap()).is_err());
    }

    /// Clauses are the last three edge literals of each root-to-leaf path
    /// of a binary tree; following the falsified edge from the root always
    /// ends in a violated clause.
    #[test]
    fn tree_formula_is_unsatisfiable() {
        let text = "15 16\n1 2 3\n2 -3 4\n-3 -4 5\n-3 -4 -5\n1 -2 6\n-2 -6 7\n-6 -7 8\n-6 -7 -8\n\
                    -1 9 10\n9 -10 11\n-10 -11 12\n-10 -11 -12\n-1 -9 13\n-9 -13 14\n-13 -14 15\n-13 -14 -15\n";
        let f = Sat34Formula::parse(text).unwrap();
        assert_eq!(solve_sat(&f).unwrap(), None);
        assert!(!truth_table(&f));
        let g = sat_to_biclique_gadget_p(&f, 1, false).unwrap();
        assert_eq!((g.graph.n(), g.p), (64, 15));
    }

    #[test]
    fn gadget_shapes() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = random_sat34(7, 7, &mut rng).unwrap();
        let g = sat_to_biclique_gadget_p(&f, 1, false).unwrap();
        assert_eq!((g.graph.n(), g.p, g.names.len()), (28, 6, 28));
        assert!(sat_to_biclique_gadget_p(&f, 3, false).unwrap().graph.n() == 30);
        let f6 = random_sat34(6, 6, &mut rng).unwrap();
        assert!(sat_to_biclique_gadget_p(&f6, 1, false).is_err());
        let g = sat_to_biclique_gadget_q(&f6, 1, false).unwrap();
        assert_eq!((g.graph.n(), g.q), (40, 13));
        // Every literal block is a set of pairwise false twins.
        for b in 0..18u32 {
            let (s, t) = (4 + 2 * b, 5 + 2 * b);
            assert!(!g.graph.adjacent(s, t));
            let mut rs = g.graph.row(s).clone();
            rs.remove(t);
            let mut rt = g.graph.row(t).clone();
            rt.remove(s);
            assert_eq!(rs, rt);
        }
    }
}
