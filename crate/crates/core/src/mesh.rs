//! Mesh patterns and occurrence counting.
//!
//! A mesh pattern is a pair `(tau, R)` of a pattern word `tau` of length k
//! and a set `R` of shaded boxes `(a, b)` with `0 <= a, b <= k`. An
//! occurrence in a host permutation is a strictly increasing index tuple
//! whose subword is order isomorphic to `tau` such that, for every shaded
//! box, the corresponding open rectangle of the host grid contains no
//! point. Rectangles are bounded by the chosen positions / values with
//! sentinels 0 and n+1 on both axes.
//!
//! The text form is `<tau>|<a>,<b>(;<a>,<b>)*` with `tau` in compact digit
//! form, e.g. `231|1,2;2,1`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;
use crate::perm::Permutation;

/// A mesh pattern `(tau, R)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MeshPattern {
    word: Permutation,
    boxes: BTreeSet<(u8, u8)>,
}

/// A strictly increasing tuple of 1-based host indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Occurrence(pub Vec<usize>);

/// The symmetries acting on both permutations and patterns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Reverse,
    Complement,
    Inverse,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse];

    pub fn apply(self, p: &Permutation) -> Permutation {
        match self {
            Symmetry::Reverse => p.reverse(),
            Symmetry::Complement => p.complement(),
            Symmetry::Inverse => p.inverse(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Reverse => "reverse",
            Symmetry::Complement => "complement",
            Symmetry::Inverse => "inverse",
        }
    }
}

impl FromStr for Symmetry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Symmetry::ALL
            .into_iter()
            .find(|sym| sym.name() == s)
            .ok_or_else(|| Error::UnknownSymmetry(s.to_string()))
    }
}

impl fmt::Display for Symmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl MeshPattern {
    pub fn new(word: Permutation, boxes: impl IntoIterator<Item = (u8, u8)>) -> Result<Self, Error> {
        let k = word.len();
        let mut set = BTreeSet::new();
        for (a, b) in boxes {
            if a as usize > k || b as usize > k {
                return Err(Error::BoxOutOfRange { a, b, k });
            }
            if !set.insert((a, b)) {
                return Err(Error::DuplicateBox { a, b });
            }
        }
        Ok(MeshPattern { word, boxes: set })
    }

    /// The classical pattern `tau` with no shading.
    pub fn classical(word: Permutation) -> Self {
        MeshPattern { word, boxes: BTreeSet::new() }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &Permutation {
        &self.word
    }

    pub fn boxes(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        self.boxes.iter().copied()
    }

    pub fn has_box(&self, a: u8, b: u8) -> bool {
        self.boxes.contains(&(a, b))
    }

    /// Same word with one more shaded box.
    pub fn with_box(&self, a: u8, b: u8) -> Result<Self, Error> {
        let mut p = self.clone();
        let k = p.len();
        if a as usize > k || b as usize > k {
            return Err(Error::BoxOutOfRange { a, b, k });
        }
        if !p.boxes.insert((a, b)) {
            return Err(Error::DuplicateBox { a, b });
        }
        Ok(p)
    }

    /// Transport the pattern along a symmetry so that occurrence counts are
    /// preserved: `count(p, pi) = count(p.transform(s), s(pi))`. The word
    /// moves by the symmetry itself; a box `(a, b)` moves to `(k-a, b)`
    /// under reverse, `(a, k-b)` under complement, and `(b, a)` under
    /// inverse.
    pub fn transform(&self, s: Symmetry) -> MeshPattern {
        let k = self.len() as u8;
        let word = s.apply(&self.word);
        let boxes = self
            .boxes
            .iter()
            .map(|&(a, b)| match s {
                Symmetry::Reverse => (k - a, b),
                Symmetry::Complement => (a, k - b),
                Symmetry::Inverse => (b, a),
            })
            .collect();
        MeshPattern { word, boxes }
    }

    /// Does the index tuple form an occurrence of this pattern in `host`?
    ///
    /// Panics if the tuple is not strictly increasing inside `1..=n` or has
    /// the wrong arity.
    pub fn is_occurrence(&self, host: &Permutation, occ: &Occurrence) -> bool {
        let idx = &occ.0;
        assert_eq!(idx.len(), self.len(), "occurrence arity must match pattern length");
        assert!(
            idx.windows(2).all(|w| w[0] < w[1]),
            "occurrence indices must be strictly increasing"
        );
        assert!(
            idx.iter().all(|&i| i >= 1 && i <= host.len()),
            "occurrence indices must lie in 1..=n"
        );
        let pos = host.position_of_value();
        self.matches(host, &pos, idx)
    }

    /// All occurrences, in lexicographic order of index tuples.
    pub fn occurrences(&self, host: &Permutation) -> Vec<Occurrence> {
        let n = host.len();
        let k = self.len();
        let mut out = Vec::new();
        if k > n {
            return out;
        }
        let pos = host.position_of_value();
        let mut idx: Vec<usize> = (1..=k).collect();
        loop {
            if self.matches(host, &pos, &idx) {
                out.push(Occurrence(idx.clone()));
            }
            // next k-combination of 1..=n
            let mut i = k;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if idx[i] < n - (k - 1 - i) {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    pub fn count(&self, host: &Permutation) -> usize {
        let n = host.len();
        let k = self.len();
        if k > n {
            return 0;
        }
        let pos = host.position_of_value();
        let mut idx: Vec<usize> = (1..=k).collect();
        let mut count = 0;
        loop {
            if self.matches(host, &pos, &idx) {
                count += 1;
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return count;
                }
                i -= 1;
                if idx[i] < n - (k - 1 - i) {
                    idx[i] += 1;
                    for j in i + 1..k {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }

    fn matches(&self, host: &Permutation, pos: &[usize], idx: &[usize]) -> bool {
        let k = self.len();
        let tau = self.word.word();
        // order isomorphism with the pattern word
        for a in 0..k {
            for b in a + 1..k {
                if (tau[a] < tau[b]) != (host.at(idx[a]) < host.at(idx[b])) {
                    return false;
                }
            }
        }
        self.boxes_clear(host, pos, idx)
    }

    /// Check the shaded regions against the host, given the chosen indices.
    fn boxes_clear(&self, host: &Permutation, pos: &[usize], idx: &[usize]) -> bool {
        let n = host.len();
        let k = self.len();
        let mut vals: Vec<u32> = idx.iter().map(|&i| host.at(i)).collect();
        vals.sort_unstable();
        for &(a, b) in &self.boxes {
            let (a, b) = (a as usize, b as usize);
            let lo_p = if a == 0 { 0 } else { idx[a - 1] };
            let hi_p = if a == k { n + 1 } else { idx[a] };
            let lo_v = if b == 0 { 0 } else { vals[b - 1] };
            let hi_v = if b == k { n as u32 + 1 } else { vals[b] };
            // scan the open value strip through the position table
            for u in lo_v + 1..hi_v {
                let p = pos[u as usize];
                if lo_p < p && p < hi_p {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for MeshPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.word)?;
        for (i, (a, b)) in self.boxes.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{a},{b}")?;
        }
        Ok(())
    }
}

impl FromStr for MeshPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bar = s.find('|').ok_or_else(|| Error::ParsePattern {
            offset: s.len(),
            reason: "missing '|' separator".to_string(),
        })?;
        let word: Permutation = s[..bar].parse().map_err(|e| Error::ParsePattern {
            offset: 0,
            reason: format!("bad pattern word: {e}"),
        })?;
        let k = word.len();
        let rest = &s[bar + 1..];
        let mut boxes = BTreeSet::new();
        if !rest.is_empty() {
            let mut offset = bar + 1;
            for part in rest.split(';') {
                let (a, b) = parse_box(part, offset)?;
                if a as usize > k || b as usize > k {
                    return Err(Error::BoxOutOfRange { a, b, k });
                }
                if !boxes.insert((a, b)) {
                    return Err(Error::DuplicateBox { a, b });
                }
                offset += part.len() + 1;
            }
        }
        Ok(MeshPattern { word, boxes })
    }
}

fn parse_box(part: &str, offset: usize) -> Result<(u8, u8), Error> {
    let err = |reason: String| Error::ParsePattern { offset, reason };
    let (a, b) = part
        .split_once(',')
        .ok_or_else(|| err(format!("box {part:?} is not of the form a,b")))?;
    let a = a.parse::<u8>().map_err(|e| err(format!("bad box coordinate {a:?}: {e}")))?;
    let b = b.parse::<u8>().map_err(|e| err(format!("bad box coordinate {b:?}: {e}")))?;
    Ok((a, b))
}

impl Serialize for MeshPattern {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl fmt::Display for Occurrence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

macro_rules! pattern_names {
    ($(($variant:ident, $tag:literal, $dsl:literal),)*) => {
        /// Names for the patterns of the catalog.
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum PatternName {
            $($variant,)*
        }

        impl PatternName {
            pub const ALL: &'static [PatternName] = &[$(PatternName::$variant,)*];

            pub fn tag(self) -> &'static str {
                match self {
                    $(PatternName::$variant => $tag,)*
                }
            }

            fn dsl(self) -> &'static str {
                match self {
                    $(PatternName::$variant => $dsl,)*
                }
            }
        }
    };
}

// Length-2 pattern numbers follow the catalog ordering in the source
// surveys; the starred, EREC/EAREC, and single-point patterns are the
// representatives used by the involution theorems and the statistics.
pattern_names![
    (Nr3, "Nr3", "12|0,0;0,1;1,2"),
    (Nr14, "Nr14", "12|0,1;1,0;1,1;1,2;2,1"),
    (Nr23, "Nr23", "12|0,0;0,2;1,0;1,1;1,2"),
    (Nr24, "Nr24", "12|0,0;0,1;1,0;1,1;1,2"),
    (Nr48, "Nr48", "12|0,0;0,1;1,2;2,1;2,2"),
    (Nr49, "Nr49", "12|0,0;0,1;1,1;1,2;2,0"),
    (Nr50, "Nr50", "12|0,0;0,1;1,1;1,2;2,2"),
    (Nr53, "Nr53", "12|0,0;0,1;1,2;2,1"),
    (Nr54, "Nr54", "12|0,0;0,1;1,1;2,2"),
    (Nr57, "Nr57", "12|0,1;1,1;1,2;2,0"),
    (Nr58, "Nr58", "12|0,1;1,0;1,1;2,2"),
    (Nr61, "Nr61", "12|0,0;0,1;1,2;2,0"),
    (Nr62, "Nr62", "12|0,0;0,1;1,0;2,2"),
    (Star1, "Star1", "21|1,0;2,0;2,2"),
    (Star2, "Star2", "21|1,0;2,0;2,1"),
    (Star3, "Star3", "21|1,0;1,1;2,0;2,2"),
    (Star4, "Star4", "21|1,0;1,2;2,0;2,1"),
    (Erec1, "EREC1", "21|0,2;1,0;2,0"),
    (Erec2, "EREC2", "21|0,2;1,1;2,1"),
    (Erec3, "EREC3", "21|0,2;2,0;2,1"),
    (Erec4, "EREC4", "21|0,2;1,0;1,1"),
    (Earec1, "EAREC1", "21|0,2;1,2;2,0"),
    (Earec2, "EAREC2", "21|0,1;1,1;2,0"),
    (Earec3, "EAREC3", "21|0,1;0,2;2,0"),
    (Earec4, "EAREC4", "21|1,1;1,2;2,0"),
    (Rec, "REC", "1|0,1"),
    (Arec, "AREC", "1|1,0"),
    (Rar, "RAR", "1|0,1;1,0"),
    (Inv21, "INV21", "21|"),
];

impl PatternName {
    /// The fixed pattern this name resolves to.
    pub fn pattern(self) -> MeshPattern {
        self.dsl().parse().expect("catalog entries are valid DSL")
    }
}

/// Resolve a catalog name.
pub fn catalog(name: PatternName) -> MeshPattern {
    name.pattern()
}

impl fmt::Display for PatternName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for PatternName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        PatternName::ALL
            .iter()
            .copied()
            .find(|n| n.tag() == s)
            .ok_or_else(|| Error::UnknownPatternName(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::iter_all;
    use crate::DEFAULT_CAP;

    fn perm(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn pat(s: &str) -> MeshPattern {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_display() {
        let p = pat("231|1,2;2,1");
        assert_eq!(p.word(), &perm("231"));
        assert_eq!(p.boxes().collect::<Vec<_>>(), vec![(1, 2), (2, 1)]);
        assert_eq!(p.to_string(), "231|1,2;2,1");

        let classical = pat("12|");
        assert!(classical.boxes().next().is_none());
        assert_eq!(classical.to_string(), "12|");

        assert_eq!(
            "21|3,0".parse::<MeshPattern>(),
            Err(Error::BoxOutOfRange { a: 3, b: 0, k: 2 })
        );
        assert_eq!(
            "21|1,0;1,0".parse::<MeshPattern>(),
            Err(Error::DuplicateBox { a: 1, b: 0 })
        );
        assert!("21".parse::<MeshPattern>().is_err());
        assert!("21|1".parse::<MeshPattern>().is_err());
    }

    #[test]
    fn occurrence_examples_346512() {
        let host = perm("346512");
        let p = pat("231|1,2;2,1");
        assert!(p.is_occurrence(&host, &Occurrence(vec![2, 3, 6])));
        // value 4 at position 2 sits in the region of box (1,2)
        assert!(!p.is_occurrence(&host, &Occurrence(vec![1, 3, 5])));
        assert!(p.occurrences(&host).contains(&Occurrence(vec![2, 3, 6])));
    }

    #[test]
    fn classical_pattern_ignores_regions() {
        let host = perm("346512");
        let shaded = pat("231|1,2;2,1");
        let classical = pat("231|");
        for occ in classical.occurrences(&host) {
            assert!(classical.is_occurrence(&host, &occ));
        }
        // every shaded occurrence is in particular a classical one
        for occ in shaded.occurrences(&host) {
            assert!(classical.is_occurrence(&host, &occ));
        }
    }

    #[test]
    fn simple_counts() {
        assert!(pat("21|").occurrences(&Permutation::identity(5)).is_empty());
        assert_eq!(pat("21|").occurrences(&perm("21")), vec![Occurrence(vec![1, 2])]);
        for p in iter_all(5, DEFAULT_CAP).unwrap() {
            assert_eq!(pat("21|").count(&p), p.inv());
        }
        for n in [0, 1, 4, 7] {
            assert_eq!(catalog(PatternName::Nr14).count(&Permutation::identity(n)), n.saturating_sub(1));
        }
    }

    #[test]
    fn erec_pattern_on_running_example() {
        assert_eq!(catalog(PatternName::Erec1).count(&perm("257189463")), 5);
    }

    #[test]
    fn length_zero_pattern() {
        let all = pat("|");
        assert_eq!(all.count(&perm("312")), 1);
        assert_eq!(all.count(&Permutation::empty()), 1);
        let shaded = pat("|0,0");
        assert_eq!(shaded.count(&Permutation::empty()), 1);
        assert_eq!(shaded.count(&perm("1")), 0);
    }

    #[test]
    fn transform_examples() {
        let nr3 = catalog(PatternName::Nr3);
        assert_eq!(nr3.transform(Symmetry::Complement).to_string(), "21|0,1;0,2;1,0");
        assert_eq!(nr3.transform(Symmetry::Inverse).to_string(), "12|0,0;1,0;2,1");
        for name in PatternName::ALL {
            let p = name.pattern();
            for s in [Symmetry::Reverse, Symmetry::Complement, Symmetry::Inverse] {
                assert_eq!(p.transform(s).transform(s), p, "{name} under {s} twice");
            }
        }
    }

    #[test]
    fn symmetry_compatibility_small() {
        for n in 0..=5 {
            for host in iter_all(n, DEFAULT_CAP).unwrap() {
                for name in PatternName::ALL {
                    let p = name.pattern();
                    for s in Symmetry::ALL {
                        assert_eq!(
                            p.count(&host),
                            p.transform(s).count(&s.apply(&host)),
                            "{name} under {s} on {host}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn catalog_tags_round_trip() {
        assert_eq!(catalog(PatternName::Nr3).to_string(), "12|0,0;0,1;1,2");
        assert_eq!(catalog(PatternName::Star1).to_string(), "21|1,0;2,0;2,2");
        assert_eq!(catalog(PatternName::Rar).to_string(), "1|0,1;1,0");
        for name in PatternName::ALL {
            assert_eq!(name.tag().parse::<PatternName>().unwrap(), *name);
        }
        assert!("Nr999".parse::<PatternName>().is_err());
    }

    #[test]
    fn shading_is_monotone() {
        // adding a box never increases the count
        for n in 0..=5 {
            for host in iter_all(n, DEFAULT_CAP).unwrap() {
                for name in PatternName::ALL {
                    let p = name.pattern();
                    let base = p.count(&host);
                    let k = p.len() as u8;
                    for a in 0..=k {
                        for b in 0..=k {
                            if p.has_box(a, b) {
                                continue;
                            }
                            let more = p.with_box(a, b).unwrap();
                            assert!(more.count(&host) <= base, "{name}+({a},{b}) on {host}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn single_point_patterns_count_statistics() {
        for n in 0..=6 {
            for host in iter_all(n, DEFAULT_CAP).unwrap() {
                assert_eq!(catalog(PatternName::Rec).count(&host), host.rec());
                assert_eq!(catalog(PatternName::Arec).count(&host), host.arec());
                assert_eq!(catalog(PatternName::Rar).count(&host), host.rar());
                assert_eq!(catalog(PatternName::Nr14).count(&host), host.succ());
                assert_eq!(catalog(PatternName::Inv21).count(&host), host.inv());
            }
        }
    }

    #[test]
    fn lemma_characterizations_of_exclusive_statistics() {
        let erec = [PatternName::Erec1, PatternName::Erec2, PatternName::Erec3, PatternName::Erec4];
        let earec =
            [PatternName::Earec1, PatternName::Earec2, PatternName::Earec3, PatternName::Earec4];
        for n in 0..=6 {
            for host in iter_all(n, DEFAULT_CAP).unwrap() {
                for name in erec {
                    assert_eq!(name.pattern().count(&host), host.erec(), "{name} on {host}");
                }
                for name in earec {
                    assert_eq!(name.pattern().count(&host), host.earec(), "{name} on {host}");
                }
            }
        }
    }
}
