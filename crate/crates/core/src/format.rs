//! Line-oriented ASCII formats for every artifact the crate reads or writes.
//!
//! ```text
//! vec <n>                      graph <n>          hap <n> <r>
//! edge <a> <b> <value>         e <a> <b>          HAHA...   (one row per day)
//! part <i1>,<i2>,... <value>
//!
//! day <d>: {a,b} {c,d} ...     scale <k>          hilbert <count> <additional>
//!                              gen <index> <p>/<q> <vec block>
//!                                                 <blank line>
//!                                                 <vec block> ...
//! ```
//!
//! Vector lines follow the global coordinate order and omit zeros; a
//! partition is written as its canonical side (the one holding team 0).
//! Certificate generators are indexed in `enumerate_pm` order. Separating
//! hyperplanes are `separation <coords>` followed by `h <coord> <p>/<q>` for
//! the nonzero entries. Blank lines and `#` comments are ignored on input,
//! except that blank lines separate the vectors of a Hilbert basis.

use std::fmt::Write as _;

use num_bigint::BigInt;

use crate::combinat::{enumerate_pm, Coordinates, EqualPartition, PMGenerator, PairIndex, ProblemVector, TeamSet};
use crate::cone::{MatchingDecomposition, Separation};
use crate::error::{Error, Result};
use crate::graphs::RegularGraph;
use crate::lp::Q;
use crate::schedule::{HapTable, Schedule};

/// Non-empty, non-comment lines with their 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn num<T: std::str::FromStr>(line: usize, s: &str) -> Result<T> {
    s.parse()
        .map_err(|_| Error::parse(line, format!("expected a number, found {s:?}")))
}

fn header(line: usize, l: &str, keyword: &str, fields: usize) -> Result<Vec<usize>> {
    let mut it = l.split_whitespace();
    if it.next() != Some(keyword) {
        return Err(Error::parse(line, format!("expected `{keyword}` header")));
    }
    let vals: Vec<usize> = it.map(|s| num(line, s)).collect::<Result<_>>()?;
    if vals.len() != fields {
        return Err(Error::parse(line, format!("`{keyword}` takes {fields} field(s)")));
    }
    Ok(vals)
}

fn rational(line: usize, s: &str) -> Result<Q> {
    let (p, q) = s.split_once('/').unwrap_or((s, "1"));
    let p: BigInt = num(line, p)?;
    let q: BigInt = num(line, q)?;
    if q == BigInt::from(0) {
        return Err(Error::parse(line, "zero denominator"));
    }
    Ok(Q::new(p, q))
}

fn write_rational(x: &Q) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

pub fn write_vec(v: &ProblemVector) -> String {
    let mut s = format!("vec {}\n", v.n());
    for (p, x) in v.edges() {
        writeln!(s, "edge {} {} {x}", p.a(), p.b()).expect("write to string");
    }
    for (c, x) in v.parts() {
        writeln!(s, "part {c} {x}").expect("write to string");
    }
    s
}

pub fn parse_vec(text: &str) -> Result<ProblemVector> {
    let mut it = lines(text);
    let (l0, h) = it.next().ok_or_else(|| Error::parse(1, "empty vector file"))?;
    let n = header(l0, h, "vec", 1)?[0];
    TeamSet::new(n).map_err(|e| Error::parse(l0, e.to_string()))?;
    let mut v = ProblemVector::zero(n);
    for (ln, l) in it {
        let f: Vec<&str> = l.split_whitespace().collect();
        match f.as_slice() {
            ["edge", a, b, x] => {
                let p = PairIndex::new(num(ln, a)?, num(ln, b)?).map_err(|e| Error::parse(ln, e.to_string()))?;
                if p.b() >= n {
                    return Err(Error::parse(ln, format!("team {} out of range", p.b())));
                }
                v.add_edge(p, num(ln, x)?);
            }
            ["part", side, x] => {
                let side: Vec<usize> = side.split(',').map(|t| num(ln, t)).collect::<Result<_>>()?;
                let c = EqualPartition::from_side(n, &side).map_err(|e| Error::parse(ln, e.to_string()))?;
                v.add_part(c, num(ln, x)?);
            }
            _ => return Err(Error::parse(ln, format!("unrecognized vector line {l:?}"))),
        }
    }
    Ok(v)
}

pub fn write_graph(g: &RegularGraph) -> String {
    let mut s = format!("graph {}\n", g.n());
    for e in g.edges() {
        writeln!(s, "e {} {}", e.a(), e.b()).expect("write to string");
    }
    s
}

pub fn parse_graph(text: &str) -> Result<RegularGraph> {
    let mut it = lines(text);
    let (l0, h) = it.next().ok_or_else(|| Error::parse(1, "empty graph file"))?;
    let n = header(l0, h, "graph", 1)?[0];
    let mut pairs = Vec::new();
    for (ln, l) in it {
        let f: Vec<&str> = l.split_whitespace().collect();
        let ["e", a, b] = f.as_slice() else {
            return Err(Error::parse(ln, format!("unrecognized graph line {l:?}")));
        };
        pairs.push((num(ln, a)?, num(ln, b)?));
    }
    RegularGraph::from_pairs(n, &pairs)
}

pub fn write_hap(hap: &HapTable) -> String {
    let mut s = format!("hap {} {}\n", hap.n(), hap.day_count());
    for row in hap.rows() {
        s.push_str(&row);
        s.push('\n');
    }
    s
}

pub fn parse_hap(text: &str) -> Result<HapTable> {
    let mut it = lines(text);
    let (l0, h) = it.next().ok_or_else(|| Error::parse(1, "empty HAP file"))?;
    let f = header(l0, h, "hap", 2)?;
    let (n, r) = (f[0], f[1]);
    let rows: Vec<(usize, &str)> = it.collect();
    if rows.len() != r {
        return Err(Error::parse(l0, format!("header announces {r} days, found {}", rows.len())));
    }
    if let Some((ln, row)) = rows.iter().find(|(_, row)| row.len() != n) {
        return Err(Error::parse(*ln, format!("row {row:?} does not have {n} entries")));
    }
    let strs: Vec<&str> = rows.iter().map(|(_, r)| *r).collect();
    HapTable::from_rows(&strs).map_err(|e| Error::parse(rows[0].0, e.to_string()))
}

pub fn write_schedule(s: &Schedule) -> String {
    s.to_string()
}

pub fn parse_schedule(text: &str) -> Result<Schedule> {
    let mut days = Vec::new();
    for (ln, l) in lines(text) {
        let (head, rest) = l
            .split_once(':')
            .ok_or_else(|| Error::parse(ln, "expected `day <d>: ...`"))?;
        let d: usize = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["day", d] => num(ln, d)?,
            _ => return Err(Error::parse(ln, "expected `day <d>: ...`")),
        };
        if d != days.len() + 1 {
            return Err(Error::parse(ln, format!("day {d} out of order")));
        }
        let mut m = Vec::new();
        for tok in rest.split_whitespace() {
            let inner = tok
                .strip_prefix('{')
                .and_then(|t| t.strip_suffix('}'))
                .ok_or_else(|| Error::parse(ln, format!("expected {{a,b}}, found {tok:?}")))?;
            let (a, b) = inner
                .split_once(',')
                .ok_or_else(|| Error::parse(ln, format!("expected {{a,b}}, found {tok:?}")))?;
            m.push(PairIndex::new(num(ln, a)?, num(ln, b)?).map_err(|e| Error::parse(ln, e.to_string()))?);
        }
        m.sort();
        days.push(m);
    }
    Ok(Schedule { days })
}

/// `scale` line, then one `gen` line per term, indexed in `enumerate_pm`
/// order for `n` teams.
pub fn write_certificate(n: usize, dec: &MatchingDecomposition) -> Result<String> {
    let all = enumerate_pm(TeamSet::new(n)?);
    let mut s = format!("scale {}\n", dec.scale);
    let mut terms: Vec<(usize, &Q)> = dec
        .terms
        .iter()
        .map(|(g, c)| {
            all.binary_search(g)
                .map(|i| (i, c))
                .map_err(|_| Error::InvalidInput(format!("generator {g} is not on {n} teams")))
        })
        .collect::<Result<_>>()?;
    terms.sort_by_key(|&(i, _)| i);
    for (i, c) in terms {
        writeln!(s, "gen {i} {}", write_rational(c)).expect("write to string");
    }
    Ok(s)
}

pub fn parse_certificate(n: usize, text: &str) -> Result<MatchingDecomposition> {
    let all = enumerate_pm(TeamSet::new(n)?);
    let mut it = lines(text);
    let (l0, h) = it.next().ok_or_else(|| Error::parse(1, "empty certificate"))?;
    let scale = match h.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["scale", k] => num(l0, k)?,
        _ => return Err(Error::parse(l0, "expected `scale <k>`")),
    };
    let mut terms: Vec<(PMGenerator, Q)> = Vec::new();
    for (ln, l) in it {
        let f: Vec<&str> = l.split_whitespace().collect();
        let ["gen", i, c] = f.as_slice() else {
            return Err(Error::parse(ln, format!("unrecognized certificate line {l:?}")));
        };
        let i: usize = num(ln, i)?;
        let g = all
            .get(i)
            .ok_or_else(|| Error::parse(ln, format!("generator index {i} out of range")))?;
        terms.push((g.clone(), rational(ln, c)?));
    }
    Ok(MatchingDecomposition { terms, scale })
}

pub fn write_separation(sep: &Separation) -> String {
    let mut s = format!("separation {}\n", sep.normal.len());
    for (i, h) in sep.normal.iter().enumerate() {
        if *h != Q::from_integer(0.into()) {
            writeln!(s, "h {i} {}", write_rational(h)).expect("write to string");
        }
    }
    s
}

pub fn parse_separation(text: &str) -> Result<Separation> {
    let mut it = lines(text);
    let (l0, h) = it.next().ok_or_else(|| Error::parse(1, "empty separation"))?;
    let len = header(l0, h, "separation", 1)?[0];
    let mut normal = vec![Q::from_integer(0.into()); len];
    for (ln, l) in it {
        let f: Vec<&str> = l.split_whitespace().collect();
        let ["h", i, x] = f.as_slice() else {
            return Err(Error::parse(ln, format!("unrecognized separation line {l:?}")));
        };
        let i: usize = num(ln, i)?;
        *normal
            .get_mut(i)
            .ok_or_else(|| Error::parse(ln, format!("coordinate {i} out of range")))? = rational(ln, x)?;
    }
    Ok(Separation { normal })
}

/// Hilbert basis in global coordinate order with its additional count.
pub fn write_hilbert(basis: &[ProblemVector], additional: usize) -> String {
    let mut s = format!("hilbert {} {additional}\n", basis.len());
    for v in basis {
        s.push('\n');
        s.push_str(&write_vec(v));
    }
    s
}

pub fn parse_hilbert(text: &str) -> Result<(Vec<ProblemVector>, usize)> {
    let mut blocks = text.split("\n\n");
    let head = blocks.next().unwrap_or("");
    let (l0, h) = lines(head).next().ok_or_else(|| Error::parse(1, "empty Hilbert basis file"))?;
    let f = header(l0, h, "hilbert", 2)?;
    let basis: Vec<ProblemVector> = blocks
        .filter(|b| !b.trim().is_empty())
        .map(parse_vec)
        .collect::<Result<_>>()?;
    if basis.len() != f[0] {
        return Err(Error::parse(l0, format!("header announces {} vectors, found {}", f[0], basis.len())));
    }
    if f[1] > basis.len() {
        return Err(Error::parse(l0, "more additional elements than basis elements"));
    }
    Ok((basis, f[1]))
}

/// Dense coordinates of a vector, one per line, for external tools.
pub fn write_dense(v: &ProblemVector) -> Result<String> {
    let coords = Coordinates::new(TeamSet::new(v.n())?);
    Ok(v.dense(&coords)
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
        + "\n")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::antiprism;

    #[test]
    fn vec_format_is_sorted_and_round_trips() {
        let hap = HapTable::from_rows(&["HHAA", "HAAH", "HAHA"]).unwrap();
        let v = crate::schedule::vector_of(&crate::graphs::complete_graph(4).unwrap(), &hap).unwrap();
        let text = write_vec(&v);
        assert!(text.starts_with("vec 4\nedge 0 1 1\nedge 0 2 1\n"));
        assert!(text.ends_with("part 0,1 1\npart 0,2 1\npart 0,3 1\n"));
        assert_eq!(parse_vec(&text).unwrap(), v);
    }

    #[test]
    fn graph_and_hap_round_trip() {
        let g = antiprism(8).unwrap();
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let hap = HapTable::from_rows(&["HAHAHAHA", "HHAAHHAA"]).unwrap();
        assert_eq!(parse_hap(&write_hap(&hap)).unwrap(), hap);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(parse_graph("graph 4\ne 0 1\nx 1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_hap("hap 4 2\nHHAA\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_vec("vec 4\nedge 0 9 1\n"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_graph("graph 4\ne 0 1\ne 2 3\ne 0 2\n").is_err());
    }

    #[test]
    fn certificate_indices_follow_generator_order() {
        for n in [4, 6] {
            let all = enumerate_pm(TeamSet::new(n).unwrap());
            assert!(all.windows(2).all(|w| w[0] < w[1]));
        }
        let all = enumerate_pm(TeamSet::new(4).unwrap());
        let dec = MatchingDecomposition {
            terms: vec![(all[4].clone(), Q::new(3.into(), 2.into())), (all[1].clone(), Q::from_integer(1.into()))],
            scale: 2.into(),
        };
        let text = write_certificate(4, &dec).unwrap();
        assert_eq!(text, "scale 2\ngen 1 1/1\ngen 4 3/2\n");
        let back = parse_certificate(4, &text).unwrap();
        assert_eq!(back.scale, dec.scale);
        assert_eq!(back.terms.len(), 2);
    }

    #[test]
    fn schedule_round_trips() {
        let s = Schedule {
            days: vec![
                vec![PairIndex::new(0, 2).unwrap(), PairIndex::new(1, 3).unwrap()],
                vec![PairIndex::new(0, 1).unwrap(), PairIndex::new(2, 3).unwrap()],
            ],
        };
        let text = write_schedule(&s);
        assert_eq!(text, "day 1: {0,2} {1,3}\nday 2: {0,1} {2,3}\n");
        assert_eq!(parse_schedule(&text).unwrap(), s);
    }
}
