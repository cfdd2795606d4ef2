use std::collections::{BTreeMap, HashSet};
use std::fmt;

use super::InstanceError;

/// Tape alphabet `{0, 1, ▷, ◁}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    Zero,
    One,
    Left,
    Right,
}

impl Symbol {
    pub fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Left => '▷',
            Symbol::Right => '◁',
        }
    }

    fn is_marker(self) -> bool {
        matches!(self, Symbol::Left | Symbol::Right)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    L,
    R,
}

/// `δ(q, b) = (q', c, X)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Transition {
    pub state: usize,
    pub write: Symbol,
    pub mv: Move,
}

/// A linear bounded automaton over `{0, 1}`.
///
/// States are indices into `states`. Entries missing from `delta` are
/// undefined; reaching one stops the simulation.
#[derive(Clone, Debug)]
pub struct Lba {
    states: Vec<String>,
    start: usize,
    halt: usize,
    delta: BTreeMap<(usize, Symbol), Transition>,
}

impl Lba {
    pub fn new(
        states: Vec<String>,
        start: usize,
        halt: usize,
        delta: BTreeMap<(usize, Symbol), Transition>,
    ) -> Result<Lba, InstanceError> {
        let bad = |msg: String| Err(InstanceError::InvalidTransition(msg));
        if start >= states.len() || halt >= states.len() {
            return bad("start or halt state out of range".into());
        }
        for (&(q, b), t) in &delta {
            let name = |i: usize| states.get(i).cloned().unwrap_or_else(|| format!("#{i}"));
            if q >= states.len() || t.state >= states.len() {
                return bad(format!("state out of range in δ({}, {})", name(q), b.as_char()));
            }
            if q == halt {
                return bad(format!("δ is defined on the halting state at {}", b.as_char()));
            }
            let ok = match b {
                Symbol::Left => t.write == Symbol::Left && t.mv == Move::R,
                Symbol::Right => t.write == Symbol::Right && t.mv == Move::L,
                _ => !t.write.is_marker(),
            };
            if !ok {
                return bad(format!("δ({}, {}) overwrites or crosses an end marker", name(q), b.as_char()));
            }
        }
        Ok(Lba { states, start, halt, delta })
    }

    /// The counter that runs through every binary word of the input length.
    ///
    /// `q0` on `◁` enters the halting state; writing `◁` back and stepping
    /// left is the only legal move there.
    pub fn binary_counter() -> Lba {
        use Move::*;
        use Symbol::*;
        let (q0, q1, halt) = (0, 1, 2);
        let t = |state, write, mv| Transition { state, write, mv };
        let delta = BTreeMap::from([
            ((q0, Zero), t(q1, One, L)),
            ((q0, One), t(q0, Zero, R)),
            ((q0, Right), t(halt, Right, L)),
            ((q1, Left), t(q0, Left, R)),
            ((q1, Zero), t(q1, Zero, L)),
        ]);
        Lba::new(vec!["q0".into(), "q1".into(), "q_halt".into()], q0, halt, delta).expect("table respects the markers")
    }

    pub fn states(&self) -> &[String] {
        &self.states
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn halt(&self) -> usize {
        self.halt
    }

    pub fn transition(&self, q: usize, b: Symbol) -> Option<&Transition> {
        self.delta.get(&(q, b))
    }
}

/// `(q, i, b0 b1 ... b_{n+1})`; the tape includes both markers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub state: usize,
    pub head: usize,
    pub tape: Vec<Symbol>,
}

impl Configuration {
    pub fn display(&self, m: &Lba) -> String {
        let tape: String = self.tape.iter().map(|b| b.as_char()).collect();
        format!("({},{},{})", m.states[self.state], self.head, tape)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LbaOutcome {
    Halted,
    StepCapReached,
    Undefined { state: usize, symbol: Symbol },
    /// The last configuration repeats the one at this index.
    Cycle { first_seen: usize },
}

#[derive(Clone, Debug)]
pub struct LbaTrace {
    pub configurations: Vec<Configuration>,
    pub outcome: LbaOutcome,
}

impl LbaTrace {
    pub fn halted(&self) -> bool {
        self.outcome == LbaOutcome::Halted
    }

    pub fn steps(&self) -> usize {
        self.configurations.len() - 1
    }

    pub fn lines(&self, m: &Lba) -> Vec<String> {
        self.configurations.iter().map(|c| c.display(m)).collect()
    }
}

/// Runs `m` on `w` from `(q0, 1, ▷w◁)` for at most `step_cap` steps.
pub fn lba_simulate(m: &Lba, w: &str, step_cap: usize) -> Result<LbaTrace, InstanceError> {
    let mut tape = vec![Symbol::Left];
    for ch in w.chars() {
        tape.push(match ch {
            '0' => Symbol::Zero,
            '1' => Symbol::One,
            _ => return Err(InstanceError::InvalidWord(format!("unexpected '{ch}'"))),
        });
    }
    tape.push(Symbol::Right);
    let mut cur = Configuration { state: m.start, head: 1, tape };
    let mut seen: HashSet<Configuration> = HashSet::from([cur.clone()]);
    let mut configurations = vec![cur.clone()];
    let outcome = loop {
        if cur.state == m.halt {
            break LbaOutcome::Halted;
        }
        if configurations.len() > step_cap {
            break LbaOutcome::StepCapReached;
        }
        let b = cur.tape[cur.head];
        let Some(t) = m.transition(cur.state, b) else {
            break LbaOutcome::Undefined { state: cur.state, symbol: b };
        };
        cur.tape[cur.head] = t.write;
        cur.state = t.state;
        cur.head = match t.mv {
            Move::L => cur.head - 1,
            Move::R => cur.head + 1,
        };
        configurations.push(cur.clone());
        if !seen.insert(cur.clone()) {
            let first_seen = configurations.iter().position(|c| *c == cur).unwrap();
            break LbaOutcome::Cycle { first_seen };
        }
    };
    Ok(LbaTrace { configurations, outcome })
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}
