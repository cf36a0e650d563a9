//! Points and lines of the finite planes behind the code constructions.
//!
//! The Euclidean plane EG(2, 2^s) is modeled inside GF(2^2s): every field
//! element is a point, the zero element is the origin, and a line is a coset
//! {p0 + eta * p1} with eta running over the GF(2^s) subfield. Nonzero points
//! are indexed by their discrete log, which is also their column index in the
//! parity-check matrices built from these planes.
//!
//! The projective plane PG(2, 2^s) is modeled inside GF(2^3s): points are
//! classes of nonzero elements under multiplication by the subfield, indexed
//! by exponent mod n with n = 2^2s + 2^s + 1.

use crate::bits::BitVec;
use crate::error::{Error, Result};
use crate::gf2m::{FieldSpec, FieldTable};

/// A line, canonicalized as the sorted list of its nonzero point indices.
/// Euclidean lines through the origin carry the flag instead of an index for
/// the origin, since the origin has no column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Line {
    points: Vec<usize>,
    contains_origin: bool,
}

impl Line {
    pub fn new(mut points: Vec<usize>, contains_origin: bool) -> Self {
        points.sort_unstable();
        points.dedup();
        Line {
            points,
            contains_origin,
        }
    }

    pub fn points(&self) -> &[usize] {
        &self.points
    }

    pub fn contains_origin(&self) -> bool {
        self.contains_origin
    }

    /// Number of points including the origin when present.
    pub fn len(&self) -> usize {
        self.points.len() + usize::from(self.contains_origin)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Length-n indicator vector of the line. Lines through the origin have
    /// no such vector because the origin has no column index.
    pub fn incidence_vector(&self, n: usize) -> Result<BitVec> {
        if self.contains_origin {
            return Err(Error::OriginOnLine);
        }
        if self.points.is_empty() {
            return Err(Error::EmptyLine);
        }
        BitVec::from_ones(n, &self.points).map_err(|_| Error::OutOfRange {
            what: "point index",
            value: *self.points.last().unwrap(),
            limit: n,
        })
    }
}

/// EG(2, 2^s) with its ambient field GF(2^2s) and the GF(2^s) subfield.
pub struct EgPlane {
    s: u32,
    field: FieldTable,
    subfield: Vec<u32>,
}

pub const EG_MIN_S: u32 = 2;
pub const EG_MAX_S: u32 = 7;

impl EgPlane {
    pub fn new(s: u32) -> Result<Self> {
        let spec = FieldSpec::default_for(check_s(s, EG_MIN_S, EG_MAX_S)? * 2)?;
        EgPlane::with_spec(s, spec)
    }

    /// Build over a caller-chosen defining polynomial for GF(2^2s).
    pub fn with_spec(s: u32, spec: FieldSpec) -> Result<Self> {
        check_s(s, EG_MIN_S, EG_MAX_S)?;
        if spec.m != 2 * s {
            return Err(Error::DegreeMismatch {
                expected: 2 * s,
                poly: spec.poly,
            });
        }
        let field = FieldTable::new(spec)?;
        let subfield = field.subfield(s)?;
        Ok(EgPlane { s, field, subfield })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    /// Number of nonzero points, 2^2s - 1.
    pub fn n(&self) -> usize {
        self.field.order()
    }

    /// Points per line, 2^s.
    pub fn line_size(&self) -> usize {
        1 << self.s
    }

    /// The line {p0 + eta * p1 : eta in GF(2^s)} through point `p0` with
    /// direction `p1`, both given as field element masks.
    pub fn line(&self, p0: u32, p1: u32) -> Result<Line> {
        let limit = 1usize << self.field.m();
        for v in [p0, p1] {
            if v as usize >= limit {
                return Err(Error::OutOfRange {
                    what: "field element",
                    value: v as usize,
                    limit,
                });
            }
        }
        if p1 == 0 {
            return Err(Error::ZeroDirection);
        }
        let mut points = Vec::with_capacity(self.line_size());
        let mut contains_origin = false;
        for &eta in &self.subfield {
            let p = self.field.add(p0, self.field.mul(eta, p1));
            match self.field.log(p) {
                Some(e) => points.push(e),
                None => contains_origin = true,
            }
        }
        let line = Line::new(points, contains_origin);
        assert_eq!(line.len(), self.line_size(), "affine line has 2^s points");
        Ok(line)
    }

    /// All lines that avoid the origin, each exactly once.
    ///
    /// Lines are grouped by direction: the multiples of a direction vector
    /// form a subfield line V through the origin, and the other cosets of V
    /// are the origin-avoiding lines with that direction. Directions are
    /// parametrized by exponent classes mod 2^s + 1.
    pub fn lines_avoiding_origin(&self) -> Vec<Line> {
        self.enumerate_lines(false)
    }

    /// The 2^s + 1 lines through the origin.
    pub fn lines_through_origin(&self) -> Vec<Line> {
        self.enumerate_lines(true)
    }

    fn enumerate_lines(&self, through_origin: bool) -> Vec<Line> {
        let q = self.line_size();
        let total = 1usize << (2 * self.s);
        let directions = self.n() / (q - 1); // 2^s + 1
        let mut lines = Vec::new();
        let mut seen = vec![false; total];
        for dir in 0..directions {
            let v: Vec<u32> = self
                .subfield
                .iter()
                .map(|&eta| self.field.mul(eta, self.field.alpha_pow(dir)))
                .collect();
            if through_origin {
                let points: Vec<usize> = v.iter().filter_map(|&p| self.field.log(p)).collect();
                lines.push(Line::new(points, true));
                continue;
            }
            seen.fill(false);
            for base in 0..total as u32 {
                if seen[base as usize] {
                    continue;
                }
                let coset: Vec<u32> = v.iter().map(|&e| e ^ base).collect();
                for &p in &coset {
                    seen[p as usize] = true;
                }
                if coset.contains(&0) {
                    continue; // the subfield line itself, through the origin
                }
                let points: Vec<usize> = coset
                    .iter()
                    .map(|&p| self.field.log(p).expect("nonzero point"))
                    .collect();
                lines.push(Line::new(points, false));
            }
        }
        lines
    }
}

/// PG(2, 2^s) with its ambient field GF(2^3s).
pub struct PgPlane {
    s: u32,
    field: FieldTable,
    /// Nonzero elements of the GF(2^s) subfield.
    scalars: Vec<u32>,
    n: usize,
}

pub const PG_MIN_S: u32 = 2;
pub const PG_MAX_S: u32 = 5;

impl PgPlane {
    pub fn new(s: u32) -> Result<Self> {
        let spec = FieldSpec::default_for(check_s(s, PG_MIN_S, PG_MAX_S)? * 3)?;
        PgPlane::with_spec(s, spec)
    }

    pub fn with_spec(s: u32, spec: FieldSpec) -> Result<Self> {
        check_s(s, PG_MIN_S, PG_MAX_S)?;
        if spec.m != 3 * s {
            return Err(Error::DegreeMismatch {
                expected: 3 * s,
                poly: spec.poly,
            });
        }
        let field = FieldTable::new(spec)?;
        let scalars = field.subfield(s)?[1..].to_vec();
        let n = (1usize << (2 * s)) + (1usize << s) + 1;
        debug_assert_eq!(field.order() % n, 0);
        Ok(PgPlane {
            s,
            field,
            scalars,
            n,
        })
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    /// Number of points (and of lines), 2^2s + 2^s + 1.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Points per line, 2^s + 1.
    pub fn line_size(&self) -> usize {
        (1 << self.s) + 1
    }

    /// The unique line through two distinct points, given by point index.
    /// Its points are the classes of z1 * alpha^i + z2 * alpha^j over all
    /// scalar pairs from the subfield, not both zero.
    pub fn line(&self, i: usize, j: usize) -> Result<Line> {
        for v in [i, j] {
            if v >= self.n {
                return Err(Error::OutOfRange {
                    what: "point index",
                    value: v,
                    limit: self.n,
                });
            }
        }
        if i == j {
            return Err(Error::SamePoint { index: i });
        }
        let a = self.field.alpha_pow(i);
        let b = self.field.alpha_pow(j);
        let mut points = vec![i, j];
        for &z1 in &self.scalars {
            let za = self.field.mul(z1, a);
            for &z2 in &self.scalars {
                let p = self.field.add(za, self.field.mul(z2, b));
                let e = self.field.log(p).expect("combination of distinct classes");
                points.push(e % self.n);
            }
        }
        let line = Line::new(points, false);
        assert_eq!(
            line.len(),
            self.line_size(),
            "projective line has 2^s + 1 points"
        );
        Ok(line)
    }

    /// All n lines, each exactly once, by walking the pencil of lines through
    /// each point and keeping a line only at its smallest point.
    pub fn all_lines(&self) -> Vec<Line> {
        let mut lines = Vec::with_capacity(self.n);
        let mut covered = vec![false; self.n];
        for i in 0..self.n {
            covered.fill(false);
            for j in i + 1..self.n {
                if covered[j] {
                    continue;
                }
                let line = self.line(i, j).expect("distinct in-range points");
                for &p in line.points() {
                    covered[p] = true;
                }
                if line.points()[0] == i {
                    lines.push(line);
                }
            }
        }
        lines
    }
}

fn check_s(s: u32, min: u32, max: u32) -> Result<u32> {
    if s < min || s > max {
        return Err(Error::OutOfRange {
            what: "geometry order parameter s",
            value: s as usize,
            limit: max as usize,
        });
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn eg4() -> EgPlane {
        EgPlane::new(2).unwrap()
    }

    #[test]
    fn base_line_of_the_standard_construction() {
        let plane = eg4();
        let f = plane.field();
        let line = plane.line(f.alpha_pow(14), f.alpha_pow(1)).unwrap();
        assert_eq!(line.points(), &[7, 8, 10, 14]);
        assert!(!line.contains_origin());
        assert_eq!(
            line.incidence_vector(15).unwrap().to_string(),
            "000000011010001"
        );
    }

    #[test]
    fn subfield_line_through_origin() {
        let plane = eg4();
        // {0 + eta * 1} is the subfield itself: {0, 1, alpha^5, alpha^10}.
        let line = plane.line(0, 1).unwrap();
        assert!(line.contains_origin());
        assert_eq!(line.points(), &[0, 5, 10]);
        assert_eq!(line.len(), 4);
        assert!(matches!(
            line.incidence_vector(15),
            Err(Error::OriginOnLine)
        ));
    }

    #[test]
    fn line_with_direction_equal_to_base_point() {
        let plane = eg4();
        let f = plane.field();
        // {(1 + eta) * alpha^14} recomputed here directly from the tables.
        let mut expect = Vec::new();
        let mut origin = false;
        for &eta in &f.subfield(2).unwrap() {
            let p = f.mul(f.add(1, eta), f.alpha_pow(14));
            match f.log(p) {
                Some(e) => expect.push(e),
                None => origin = true,
            }
        }
        let line = plane.line(f.alpha_pow(14), f.alpha_pow(14)).unwrap();
        assert_eq!(line.contains_origin(), origin);
        let got: HashSet<_> = line.points().iter().copied().collect();
        let want: HashSet<_> = expect.into_iter().collect();
        assert_eq!(got, want);
        assert_eq!(line.points(), &[4, 9, 14]);
    }

    #[test]
    fn zero_direction_is_rejected() {
        let plane = eg4();
        assert!(matches!(plane.line(1, 0), Err(Error::ZeroDirection)));
        assert!(matches!(plane.line(16, 1), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn eg_line_enumeration_counts() {
        for s in [2u32, 3] {
            let plane = EgPlane::new(s).unwrap();
            let q = plane.line_size();
            let lines = plane.lines_avoiding_origin();
            assert_eq!(lines.len(), plane.n(), "s={s}");
            let distinct: HashSet<_> = lines.iter().map(|l| l.points().to_vec()).collect();
            assert_eq!(distinct.len(), plane.n());
            for line in &lines {
                assert!(!line.contains_origin());
                assert_eq!(line.len(), q);
            }
            let through = plane.lines_through_origin();
            assert_eq!(through.len(), q + 1);
            for line in &through {
                assert!(line.contains_origin());
                assert_eq!(line.len(), q);
            }
            // 2^s * (2^s + 1) lines in total.
            assert_eq!(lines.len() + through.len(), q * (q + 1));
        }
    }

    #[test]
    fn every_nonorigin_point_lies_on_2s_nonorigin_lines() {
        let plane = EgPlane::new(2).unwrap();
        let lines = plane.lines_avoiding_origin();
        let mut count = vec![0usize; plane.n()];
        for line in &lines {
            for &p in line.points() {
                count[p] += 1;
            }
        }
        assert!(count.iter().all(|&c| c == plane.line_size()));
    }

    #[test]
    fn eg_point_pairs_are_covered_exactly_once() {
        // Together the origin-avoiding and origin lines cover each pair of
        // the 16 points exactly once: 20 lines * C(4,2) = C(16,2).
        let plane = eg4();
        let mut pair_count = 0usize;
        for line in plane
            .lines_avoiding_origin()
            .into_iter()
            .chain(plane.lines_through_origin())
        {
            let k = line.len();
            pair_count += k * (k - 1) / 2;
        }
        assert_eq!(pair_count, 16 * 15 / 2);

        // Distinct nonorigin lines meet in at most one point.
        let lines = plane.lines_avoiding_origin();
        for (i, a) in lines.iter().enumerate() {
            for b in &lines[i + 1..] {
                let shared = a.points().iter().filter(|p| b.points().contains(p)).count();
                assert!(shared <= 1);
            }
        }
    }

    #[test]
    fn enumerated_eg_lines_match_direct_line_construction() {
        let plane = eg4();
        let f = plane.field();
        for line in plane.lines_avoiding_origin() {
            let a = f.alpha_pow(line.points()[0]);
            let b = f.alpha_pow(line.points()[1]);
            let rebuilt = plane.line(a, f.add(a, b)).unwrap();
            assert_eq!(rebuilt, line);
        }
    }

    #[test]
    fn s_range_is_enforced() {
        assert!(matches!(EgPlane::new(1), Err(Error::OutOfRange { .. })));
        assert!(matches!(EgPlane::new(8), Err(Error::OutOfRange { .. })));
        assert!(matches!(PgPlane::new(1), Err(Error::OutOfRange { .. })));
        assert!(matches!(PgPlane::new(6), Err(Error::OutOfRange { .. })));
        // The field spec must match the ambient degree 2s.
        let wrong = FieldSpec::default_for(6).unwrap();
        assert!(matches!(
            EgPlane::with_spec(2, wrong),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn pg_line_basics() {
        let plane = PgPlane::new(2).unwrap();
        assert_eq!(plane.n(), 21);
        let line = plane.line(0, 1).unwrap();
        assert_eq!(line.len(), 5);
        assert!(line.points().contains(&0));
        assert!(line.points().contains(&1));
        assert_eq!(line, plane.line(1, 0).unwrap());
        assert!(matches!(plane.line(3, 3), Err(Error::SamePoint { .. })));
        assert!(matches!(plane.line(0, 21), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn pg_line_counts() {
        for (s, n) in [(2u32, 21usize), (3, 73)] {
            let plane = PgPlane::new(s).unwrap();
            assert_eq!(plane.n(), n);
            let lines = plane.all_lines();
            assert_eq!(lines.len(), n, "s={s}");
            let distinct: HashSet<_> = lines.iter().map(|l| l.points().to_vec()).collect();
            assert_eq!(distinct.len(), n);
            for line in &lines {
                assert_eq!(line.len(), plane.line_size());
            }
            // Every point lies on 2^s + 1 lines.
            let mut count = vec![0usize; n];
            for line in &lines {
                for &p in line.points() {
                    count[p] += 1;
                }
            }
            assert!(count.iter().all(|&c| c == plane.line_size()));
        }
    }

    #[test]
    fn distinct_pg_lines_meet_in_exactly_one_point() {
        let plane = PgPlane::new(2).unwrap();
        let lines = plane.all_lines();
        for (i, a) in lines.iter().enumerate() {
            for b in &lines[i + 1..] {
                let shared = a.points().iter().filter(|p| b.points().contains(p)).count();
                assert_eq!(shared, 1);
            }
        }
    }

    #[test]
    fn incidence_vector_validations() {
        let line = Line::new(vec![2, 9], false);
        assert_eq!(line.incidence_vector(10).unwrap().ones(), vec![2, 9]);
        assert!(matches!(
            line.incidence_vector(9),
            Err(Error::OutOfRange { .. })
        ));
        let empty = Line::new(vec![], false);
        assert!(matches!(empty.incidence_vector(5), Err(Error::EmptyLine)));
    }
}
