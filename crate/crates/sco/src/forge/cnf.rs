//! 3-CNF formulas and the DIMACS text format.
//!
//! Every clause has exactly three literals over three distinct variables;
//! the instance builders in [`super::reduce`] depend on that shape.
//! Literals follow the DIMACS convention: `v + 1` for the positive literal
//! of variable `v`, `-(v + 1)` for its negation.

use std::fmt;

/// Errors from formula construction or DIMACS parsing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CnfError {
    /// A literal of zero magnitude or referring to a variable outside
    /// `1..=num_vars`.
    BadLiteral { clause: usize, literal: i32 },
    /// A clause mentioning one variable twice.
    RepeatedVariable { clause: usize, variable: usize },
    /// A clause that does not have exactly three literals.
    WrongClauseWidth { clause: usize, width: usize },
    /// Malformed DIMACS text; `line` is 1-based.
    Syntax { line: usize, message: String },
    /// The `p cnf` header promised a different number of clauses.
    ClauseCountMismatch { header: usize, found: usize },
    /// A clause sequence that is not a permutation of `0..num_clauses`.
    BadClauseOrder { reason: String },
}

impl fmt::Display for CnfError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CnfError::BadLiteral { clause, literal } => {
                write!(f, "clause {clause}: literal {literal} is out of range")
            }
            CnfError::RepeatedVariable { clause, variable } => {
                write!(f, "clause {clause}: variable {} repeats", variable + 1)
            }
            CnfError::WrongClauseWidth { clause, width } => {
                write!(f, "clause {clause}: {width} literals instead of 3")
            }
            CnfError::Syntax { line, message } => write!(f, "line {line}: {message}"),
            CnfError::ClauseCountMismatch { header, found } => {
                write!(f, "header declares {header} clauses, found {found}")
            }
            CnfError::BadClauseOrder { reason } => write!(f, "bad clause order: {reason}"),
        }
    }
}

impl std::error::Error for CnfError {}

/// A 3-CNF formula: every clause holds exactly three literals over three
/// distinct variables. Variables are numbered `0..num_vars`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    /// Validates literal ranges and variable distinctness.
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self, CnfError> {
        for (c, clause) in clauses.iter().enumerate() {
            let mut vars = [0usize; 3];
            for (i, &lit) in clause.iter().enumerate() {
                let magnitude = lit.unsigned_abs() as usize;
                if lit == 0 || magnitude > num_vars {
                    return Err(CnfError::BadLiteral {
                        clause: c,
                        literal: lit,
                    });
                }
                vars[i] = magnitude - 1;
            }
            for i in 0..3 {
                for j in i + 1..3 {
                    if vars[i] == vars[j] {
                        return Err(CnfError::RepeatedVariable {
                            clause: c,
                            variable: vars[i],
                        });
                    }
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[[i32; 3]] {
        &self.clauses
    }

    /// Variable index (0-based) of the `slot`-th literal of clause `c`.
    pub fn variable(&self, c: usize, slot: usize) -> usize {
        self.clauses[c][slot].unsigned_abs() as usize - 1
    }

    /// Whether the `slot`-th literal of clause `c` is negated.
    pub fn negated(&self, c: usize, slot: usize) -> bool {
        self.clauses[c][slot] < 0
    }

    /// Evaluates the formula under `assignment` (`assignment[v]` is the
    /// truth value of variable `v`; the length must be `num_vars`).
    pub fn evaluate(&self, assignment: &[bool]) -> bool {
        assert_eq!(assignment.len(), self.num_vars, "assignment length");
        self.clauses.iter().all(|clause| {
            clause
                .iter()
                .any(|&lit| assignment[lit.unsigned_abs() as usize - 1] == (lit > 0))
        })
    }

    /// How often variable `v` occurs across all clauses.
    pub fn occurrences(&self, v: usize) -> usize {
        self.clauses
            .iter()
            .flatten()
            .filter(|&&lit| lit.unsigned_abs() as usize == v + 1)
            .count()
    }
}

/// Parses DIMACS CNF text: `c` comment lines, one `p cnf <vars> <clauses>`
/// header, then whitespace-separated literals with `0` closing each clause.
/// Clauses may span lines. Every clause must have exactly three literals
/// over distinct variables.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, CnfError> {
    let mut header: Option<(usize, usize)> = None;
    let mut raw_clauses: Vec<Vec<i32>> = Vec::new();
    let mut open: Vec<i32> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix('p') {
            if header.is_some() {
                return Err(CnfError::Syntax {
                    line: line_no,
                    message: "second header line".into(),
                });
            }
            let fields: Vec<&str> = rest.split_whitespace().collect();
            if fields.len() != 3 || fields[0] != "cnf" {
                return Err(CnfError::Syntax {
                    line: line_no,
                    message: "header must read `p cnf <vars> <clauses>`".into(),
                });
            }
            let vars = fields[1].parse::<usize>().map_err(|_| CnfError::Syntax {
                line: line_no,
                message: format!("bad variable count `{}`", fields[1]),
            })?;
            let clauses = fields[2].parse::<usize>().map_err(|_| CnfError::Syntax {
                line: line_no,
                message: format!("bad clause count `{}`", fields[2]),
            })?;
            header = Some((vars, clauses));
            continue;
        }
        if header.is_none() {
            return Err(CnfError::Syntax {
                line: line_no,
                message: "clause before `p cnf` header".into(),
            });
        }
        for token in trimmed.split_whitespace() {
            let lit = token.parse::<i32>().map_err(|_| CnfError::Syntax {
                line: line_no,
                message: format!("bad literal `{token}`"),
            })?;
            if lit == 0 {
                raw_clauses.push(std::mem::take(&mut open));
            } else {
                open.push(lit);
            }
        }
    }
    let Some((num_vars, declared)) = header else {
        return Err(CnfError::Syntax {
            line: text.lines().count().max(1),
            message: "missing `p cnf` header".into(),
        });
    };
    if !open.is_empty() {
        raw_clauses.push(open);
    }
    if raw_clauses.len() != declared {
        return Err(CnfError::ClauseCountMismatch {
            header: declared,
            found: raw_clauses.len(),
        });
    }
    let mut clauses = Vec::with_capacity(raw_clauses.len());
    for (c, clause) in raw_clauses.into_iter().enumerate() {
        let width = clause.len();
        let three: [i32; 3] = clause
            .try_into()
            .map_err(|_| CnfError::WrongClauseWidth { clause: c, width })?;
        clauses.push(three);
    }
    CnfFormula::new(num_vars, clauses)
}

/// Renders a formula back to DIMACS text.
pub fn to_dimacs(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for clause in f.clauses() {
        out.push_str(&format!(
            "{} {} {} 0\n",
            clause[0], clause[1], clause[2]
        ));
    }
    out
}

/// A processing order over a formula's clauses: the instance builder lays
/// clause gadgets out in this sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseOrder {
    sequence: Vec<usize>,
}

impl ClauseOrder {
    /// The order `0, 1, ..., num_clauses - 1`.
    pub fn identity(num_clauses: usize) -> Self {
        ClauseOrder {
            sequence: (0..num_clauses).collect(),
        }
    }

    /// Validates that `sequence` is a permutation of `0..sequence.len()`.
    pub fn new(sequence: Vec<usize>) -> Result<Self, CnfError> {
        let mut seen = vec![false; sequence.len()];
        for &c in &sequence {
            if c >= sequence.len() {
                return Err(CnfError::BadClauseOrder {
                    reason: format!("index {c} out of range for {} clauses", sequence.len()),
                });
            }
            if seen[c] {
                return Err(CnfError::BadClauseOrder {
                    reason: format!("index {c} repeats"),
                });
            }
            seen[c] = true;
        }
        Ok(ClauseOrder { sequence })
    }

    /// Clause index placed at position `pos`.
    pub fn clause_at(&self, pos: usize) -> usize {
        self.sequence[pos]
    }

    pub fn len(&self) -> usize {
        self.sequence.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sequence.is_empty()
    }

    pub fn sequence(&self) -> &[usize] {
        &self.sequence
    }
}
