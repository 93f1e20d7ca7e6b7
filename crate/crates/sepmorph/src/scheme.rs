//! Real schemes of curves as rooted forests of ovals with an optional
//! pseudoline, in an ASCII bracket notation: `<0>` is the empty
//! collection, `<n>` is `n` unnested ovals, `1<...>` is an oval containing
//! a collection, ` u ` joins disjoint collections, and the prefix `J u `
//! marks the pseudoline of an odd-degree plane curve. Parsing
//! canonicalizes sibling order, so printing is deterministic and
//! `parse(print(s)) == s`.

use std::cmp::Ordering;

use crate::decomp::{adjoint_divisor_class, maximize_decomposition};
use crate::lattice::builtin_surface;
use crate::obstruct::quadric_obstruction;
use crate::{Error, Result};

/// Largest oval count accepted for a single integer item.
const MAX_COUNT: i64 = 1_000_000;

/// One oval; children are the ovals directly inside it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OvalNode {
    pub children: Vec<OvalNode>,
}

impl OvalNode {
    pub fn leaf() -> Self {
        OvalNode { children: Vec::new() }
    }

    pub fn with_children(children: Vec<OvalNode>) -> Self {
        OvalNode { children }
    }

    fn depth(&self) -> i64 {
        1 + self.children.iter().map(|c| c.depth()).max().unwrap_or(0)
    }

    fn count(&self) -> i64 {
        1 + self.children.iter().map(|c| c.count()).sum::<i64>()
    }
}

/// Sibling order of the canonical form: by subtree depth, then subtree
/// oval count, then recursively by the (already canonical) child lists.
fn cmp_nodes(a: &OvalNode, b: &OvalNode) -> Ordering {
    a.depth()
        .cmp(&b.depth())
        .then(a.count().cmp(&b.count()))
        .then_with(|| cmp_forests(&a.children, &b.children))
}

fn cmp_forests(a: &[OvalNode], b: &[OvalNode]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match cmp_nodes(x, y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

fn canonicalize(nodes: &mut Vec<OvalNode>) {
    for n in nodes.iter_mut() {
        canonicalize(&mut n.children);
    }
    nodes.sort_by(cmp_nodes);
}

/// A real scheme in canonical form: ordered rooted forest of ovals plus a
/// pseudoline flag. Canonical order is enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealScheme {
    pseudoline: bool,
    forest: Vec<OvalNode>,
}

impl RealScheme {
    /// Build a scheme from any forest; sibling order is canonicalized.
    pub fn new(pseudoline: bool, mut forest: Vec<OvalNode>) -> Self {
        canonicalize(&mut forest);
        RealScheme { pseudoline, forest }
    }

    pub fn pseudoline(&self) -> bool {
        self.pseudoline
    }

    pub fn forest(&self) -> &[OvalNode] {
        &self.forest
    }
}

/// Aggregate counts of a scheme: `l` is ovals plus pseudoline, `depth` the
/// longest nest, `injective_pairs` the number of ancestor/descendant oval
/// pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SchemeStats {
    pub l: i64,
    pub depth: i64,
    pub injective_pairs: i64,
}

pub fn scheme_stats(s: &RealScheme) -> SchemeStats {
    fn walk(nodes: &[OvalNode], above: i64, ovals: &mut i64, pairs: &mut i64) {
        for n in nodes {
            *ovals += 1;
            *pairs += above;
            walk(&n.children, above + 1, ovals, pairs);
        }
    }
    let mut ovals = 0;
    let mut pairs = 0;
    walk(&s.forest, 0, &mut ovals, &mut pairs);
    let depth = s.forest.iter().map(|n| n.depth()).max().unwrap_or(0);
    SchemeStats {
        l: ovals + i64::from(s.pseudoline),
        depth,
        injective_pairs: pairs,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Open,
    Close,
    Join,
    Pseudoline,
    Int(i64),
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Lexer {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    /// Next token with its starting byte offset; `None` at end of input.
    fn next(&mut self) -> Result<Option<(Token, usize)>> {
        self.skip_ws();
        if self.pos >= self.bytes.len() {
            return Ok(None);
        }
        let start = self.pos;
        let tok = match self.bytes[self.pos] {
            b'<' => {
                self.pos += 1;
                Token::Open
            }
            b'>' => {
                self.pos += 1;
                Token::Close
            }
            b'u' => {
                self.pos += 1;
                Token::Join
            }
            b'J' => {
                self.pos += 1;
                Token::Pseudoline
            }
            b'0'..=b'9' => {
                let mut value: i64 = 0;
                while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
                    value = value * 10 + i64::from(self.bytes[self.pos] - b'0');
                    if value > MAX_COUNT {
                        return Err(Error::SchemeSyntax {
                            pos: start,
                            msg: format!("oval count exceeds {MAX_COUNT}"),
                        });
                    }
                    self.pos += 1;
                }
                Token::Int(value)
            }
            other => {
                return Err(Error::SchemeSyntax {
                    pos: start,
                    msg: format!("unexpected character `{}`", other as char),
                });
            }
        };
        Ok(Some((tok, start)))
    }
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    lookahead: Option<(Token, usize)>,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Result<Self> {
        let mut lexer = Lexer::new(text);
        let lookahead = lexer.next()?;
        Ok(Parser { lexer, lookahead })
    }

    fn peek(&self) -> Option<Token> {
        self.lookahead.map(|(t, _)| t)
    }

    fn bump(&mut self) -> Result<Option<(Token, usize)>> {
        let current = self.lookahead.take();
        self.lookahead = self.lexer.next()?;
        Ok(current)
    }

    fn expect(&mut self, want: Token, what: &str) -> Result<usize> {
        match self.bump()? {
            Some((tok, pos)) if tok == want => Ok(pos),
            Some((_, pos)) => Err(Error::SchemeSyntax {
                pos,
                msg: format!("expected {what}"),
            }),
            None => Err(Error::SchemeSyntax {
                pos: self.lexer.bytes.len(),
                msg: format!("expected {what}, found end of input"),
            }),
        }
    }

    /// `<0>` (only when `allow_empty`) or `<` item (`u` item)* `>`.
    fn bracketed(&mut self, allow_empty: bool) -> Result<Vec<OvalNode>> {
        self.expect(Token::Open, "`<`")?;
        if let Some(Token::Int(0)) = self.peek() {
            let (_, zero_pos) = self.bump()?.expect("peeked");
            if !allow_empty {
                return Err(Error::SchemeSyntax {
                    pos: zero_pos,
                    msg: "a nested collection must not be empty".into(),
                });
            }
            match self.bump()? {
                Some((Token::Close, _)) => return Ok(Vec::new()),
                _ => {
                    return Err(Error::SchemeSyntax {
                        pos: zero_pos,
                        msg: "`0` stands alone: write `<0>`".into(),
                    });
                }
            }
        }
        let mut forest = Vec::new();
        loop {
            self.item(&mut forest)?;
            match self.bump()? {
                Some((Token::Join, _)) => continue,
                Some((Token::Close, _)) => return Ok(forest),
                Some((_, pos)) => {
                    return Err(Error::SchemeSyntax {
                        pos,
                        msg: "expected `u` or `>`".into(),
                    });
                }
                None => {
                    return Err(Error::SchemeSyntax {
                        pos: self.lexer.bytes.len(),
                        msg: "unclosed `<`".into(),
                    });
                }
            }
        }
    }

    /// A positive integer (that many unnested ovals) or `1<...>`.
    fn item(&mut self, forest: &mut Vec<OvalNode>) -> Result<()> {
        match self.bump()? {
            Some((Token::Int(0), pos)) => Err(Error::SchemeSyntax {
                pos,
                msg: "`0` cannot be combined with other items".into(),
            }),
            Some((Token::Int(1), _)) if self.peek() == Some(Token::Open) => {
                let inner = self.bracketed(false)?;
                forest.push(OvalNode::with_children(inner));
                Ok(())
            }
            Some((Token::Int(n), _)) => {
                for _ in 0..n {
                    forest.push(OvalNode::leaf());
                }
                Ok(())
            }
            Some((_, pos)) => Err(Error::SchemeSyntax {
                pos,
                msg: "expected an oval count or `1<...>`".into(),
            }),
            None => Err(Error::SchemeSyntax {
                pos: self.lexer.bytes.len(),
                msg: "expected an item, found end of input".into(),
            }),
        }
    }
}

/// Parse the bracket notation. Whitespace between tokens is ignored, so
/// the compact form produced for machine-readable output parses too.
pub fn parse_scheme(text: &str) -> Result<RealScheme> {
    let mut p = Parser::new(text)?;
    let pseudoline = if p.peek() == Some(Token::Pseudoline) {
        p.bump()?;
        p.expect(Token::Join, "`u` after `J`")?;
        true
    } else {
        false
    };
    let forest = p.bracketed(true)?;
    if let Some((_, pos)) = p.lookahead {
        return Err(Error::SchemeSyntax {
            pos,
            msg: "trailing input after the scheme".into(),
        });
    }
    Ok(RealScheme::new(pseudoline, forest))
}

fn print_forest(nodes: &[OvalNode], out: &mut String) {
    // Canonical order puts all leaves first; they merge into one count.
    let leaves = nodes.iter().take_while(|n| n.children.is_empty()).count();
    let mut first = true;
    if leaves > 0 {
        out.push_str(&leaves.to_string());
        first = false;
    }
    for n in &nodes[leaves..] {
        if !first {
            out.push_str(" u ");
        }
        first = false;
        out.push_str("1<");
        print_forest(&n.children, out);
        out.push('>');
    }
}

/// Canonical textual form; `parse_scheme` inverts it exactly.
pub fn print_scheme(s: &RealScheme) -> String {
    let mut out = String::new();
    if s.pseudoline {
        out.push_str("J u ");
    }
    if s.forest.is_empty() {
        out.push_str("<0>");
    } else {
        out.push('<');
        print_forest(&s.forest, &mut out);
        out.push('>');
    }
    out
}

/// Canonical form with all whitespace removed, for single-token contexts.
pub fn print_scheme_compact(s: &RealScheme) -> String {
    print_scheme(s).replace(' ', "")
}

/// Violations of the constraints a degree-`d` plane curve puts on a
/// scheme: pseudoline iff odd degree, component count within the genus
/// bound, nest depth at most `floor(d/2)`. Violations are data, not
/// errors.
pub fn check_plane_scheme(s: &RealScheme, d: i64) -> Vec<&'static str> {
    let mut out = Vec::new();
    if d < 1 {
        out.push("degree-positive");
        return out;
    }
    let stats = scheme_stats(s);
    if s.pseudoline != (d.rem_euclid(2) == 1) {
        out.push("pseudoline-parity");
    }
    if stats.l > (d - 1) * (d - 2) / 2 + 1 {
        out.push("harnack-klein");
    }
    if stats.depth > d / 2 {
        out.push("nest-depth");
    }
    out
}

/// Violations for a bidegree `(d,d)` curve on the quadric ellipsoid:
/// component count within the genus bound and, for separating curves, of
/// the parity of `d`. The real part is a sphere, so a pseudoline in the
/// input is a hard error.
pub fn check_quadric_scheme(s: &RealScheme, d: i64, type_one: bool) -> Result<Vec<&'static str>> {
    if s.pseudoline {
        return Err(Error::PseudolineOnQuadric);
    }
    let mut out = Vec::new();
    if d < 1 {
        out.push("degree-positive");
        return Ok(out);
    }
    let stats = scheme_stats(s);
    if stats.l > (d - 1) * (d - 1) + 1 {
        out.push("harnack-klein");
    }
    if type_one && (stats.l - d).rem_euclid(2) != 0 {
        out.push("parity");
    }
    Ok(out)
}

/// One row of the table of obstructed separating schemes on the quadric
/// ellipsoid: the scheme (or scheme family), the recomputed bound triple,
/// and the decomposition classes behind it.
#[derive(Debug, Clone, PartialEq, Eq)]
#[non_exhaustive]
pub struct Table1Row {
    pub d: i64,
    /// Textual scheme or family pattern shown to users.
    pub scheme_family: String,
    pub left_bound: i64,
    pub middle: i64,
    pub right_bound: i64,
    pub d0: (i64, i64),
    /// `None` encodes an empty residual class.
    pub d1: Option<(i64, i64)>,
    /// Expansion of the family: every concrete scheme the row covers.
    pub members: Vec<RealScheme>,
}

fn family_members_5() -> Vec<RealScheme> {
    let mut out = Vec::new();
    // a unnested ovals plus nests 1<b>, 1<c>; a even, all collections
    // nonempty, a + b + c = 5; {b, c} unordered.
    for a in (0..=5i64).step_by(2) {
        for b in 1..=5 - a - 1 {
            let c = 5 - a - b;
            if c < b {
                continue;
            }
            let mut forest: Vec<OvalNode> = (0..a).map(|_| OvalNode::leaf()).collect();
            forest.push(OvalNode::with_children(
                (0..b).map(|_| OvalNode::leaf()).collect(),
            ));
            forest.push(OvalNode::with_children(
                (0..c).map(|_| OvalNode::leaf()).collect(),
            ));
            out.push(RealScheme::new(false, forest));
        }
    }
    out
}

/// The complete list of real schemes of separating bidegree `(d,d)` curves
/// whose minimal morphism degree is excluded: exactly three rows. Bounds
/// and decomposition classes are recomputed from the lattice and
/// obstruction routines at call time and checked against the stored
/// expectations; a mismatch is an internal inconsistency.
pub fn table1() -> Result<Vec<Table1Row>> {
    let specs: [(i64, &str, (i64, i64, i64), (i64, i64), Option<(i64, i64)>, Vec<RealScheme>);
        3] = [
        (
            4,
            "<1<1<1<1>>>>",
            (0, 2, 3),
            (1, 1),
            None,
            vec![parse_scheme("<1<1<1<1>>>>")?],
        ),
        (
            5,
            "<1<1<1<1<1>>>>>",
            (0, 1, 3),
            (1, 1),
            Some((1, 1)),
            vec![parse_scheme("<1<1<1<1<1>>>>>")?],
        ),
        (
            5,
            "<a u 1<b> u 1<c>> for a even, a+b+c=5",
            (0, 2, 3),
            (1, 1),
            Some((1, 1)),
            family_members_5(),
        ),
    ];
    let quadric = builtin_surface("QuadricEllipsoid")?;
    let mut rows = Vec::new();
    for (d, family, expected_bounds, expected_d0, expected_d1, members) in specs {
        let ls: Vec<i64> = members.iter().map(|m| scheme_stats(m).l).collect();
        let Some((&l, rest)) = ls.split_first() else {
            return Err(Error::Inconsistency("table row with no members".into()));
        };
        if rest.iter().any(|&other| other != l) {
            return Err(Error::Inconsistency(format!(
                "table row for degree {d} mixes component counts {ls:?}"
            )));
        }
        for member in &members {
            if !check_quadric_scheme(member, d, true)?.is_empty() {
                return Err(Error::Inconsistency(format!(
                    "table member {} is not a valid degree-{d} scheme",
                    print_scheme(member)
                )));
            }
        }
        let verdict = quadric_obstruction(d, l)?;
        let bounds = (verdict.left_bound, verdict.middle, verdict.right_bound);
        if !verdict.applies || bounds != expected_bounds {
            return Err(Error::Inconsistency(format!(
                "recomputed bounds {bounds:?} for degree {d}, l = {l} disagree with the stored row {expected_bounds:?}"
            )));
        }
        let curve = quadric.divisor(&[d, d])?;
        let dec = maximize_decomposition(&adjoint_divisor_class(&curve)?)?;
        let d0 = (dec.d0.coords[0], dec.d0.coords[1]);
        let d1 = if dec.d1.is_zero() {
            None
        } else {
            Some((dec.d1.coords[0], dec.d1.coords[1]))
        };
        if d0 != expected_d0 || d1 != expected_d1 {
            return Err(Error::Inconsistency(format!(
                "recomputed decomposition ({d0:?}, {d1:?}) for degree {d} disagrees with the stored row"
            )));
        }
        rows.push(Table1Row {
            d,
            scheme_family: family.to_string(),
            left_bound: bounds.0,
            middle: bounds.1,
            right_bound: bounds.2,
            d0,
            d1,
            members,
        });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn stats_of(text: &str) -> SchemeStats {
        scheme_stats(&parse_scheme(text).unwrap())
    }

    #[test]
    fn parse_basics() {
        let nest = parse_scheme("<1<1<1<1>>>>").unwrap();
        assert_eq!(
            scheme_stats(&nest),
            SchemeStats {
                l: 4,
                depth: 4,
                injective_pairs: 6
            }
        );
        let empty = parse_scheme("<0>").unwrap();
        assert!(!empty.pseudoline());
        assert_eq!(scheme_stats(&empty).l, 0);
        assert_eq!(
            stats_of("<5>"),
            SchemeStats {
                l: 5,
                depth: 1,
                injective_pairs: 0
            }
        );
        assert_eq!(
            stats_of("<2 u 1<2> u 1<1>>"),
            SchemeStats {
                l: 7,
                depth: 2,
                injective_pairs: 3
            }
        );
        let quintic = parse_scheme("J u <4>").unwrap();
        assert!(quintic.pseudoline());
        assert_eq!(scheme_stats(&quintic).l, 5);
        let line_only = parse_scheme("J u <0>").unwrap();
        assert_eq!(scheme_stats(&line_only).l, 1);
    }

    #[test]
    fn whitespace_and_compact_forms_parse_alike() {
        let reference = parse_scheme("<2 u 1<1> u 1<2>>").unwrap();
        assert_eq!(parse_scheme("<2u1<1>u1<2>>").unwrap(), reference);
        assert_eq!(parse_scheme("  < 2 u 1 < 1 > u 1<2> >  ").unwrap(), reference);
        assert_eq!(
            parse_scheme("Ju<4>").unwrap(),
            parse_scheme("J u <4>").unwrap()
        );
    }

    #[test]
    fn printing_is_canonical() {
        let s = parse_scheme("<2 u 1<2> u 1<1>>").unwrap();
        assert_eq!(print_scheme(&s), "<2 u 1<1> u 1<2>>");
        assert_eq!(print_scheme_compact(&s), "<2u1<1>u1<2>>");
        assert_eq!(print_scheme(&parse_scheme("<0>").unwrap()), "<0>");
        assert_eq!(print_scheme(&parse_scheme("J u <4>").unwrap()), "J u <4>");
        // Deep items sort after shallow ones, equal depth sorts by size.
        let s = parse_scheme("<1<1<1>> u 3 u 1<2>>").unwrap();
        assert_eq!(print_scheme(&s), "<3 u 1<2> u 1<1<1>>>");
    }

    #[test]
    fn syntax_errors_carry_positions() {
        for (text, expect_pos) in [
            ("", 0),
            ("<", 1),
            ("<>", 1),
            ("<0 u 1>", 1),
            ("<1 u 0>", 5),
            ("<1<>>", 3),
            ("<2<1>>", 2),
            ("<1<1>", 5),
            ("<1> extra", 4),
            ("J <1>", 2),
            ("x", 0),
            ("<1,2>", 2),
        ] {
            match parse_scheme(text) {
                Err(Error::SchemeSyntax { pos, .. }) => {
                    assert_eq!(pos, expect_pos, "position for {text:?}")
                }
                other => panic!("expected syntax error for {text:?}, got {other:?}"),
            }
        }
    }

    #[test]
    fn zero_only_stands_alone() {
        assert!(parse_scheme("<0>").is_ok());
        assert!(parse_scheme("J u <0>").is_ok());
        assert!(matches!(
            parse_scheme("<1<0>>"),
            Err(Error::SchemeSyntax { .. })
        ));
    }

    #[test]
    fn stats_recount_oracle() {
        fn recount(nodes: &[OvalNode]) -> i64 {
            nodes.iter().map(|n| 1 + recount(&n.children)).sum()
        }
        for text in ["<0>", "<5>", "<1<1<1<1>>>>", "<2 u 1<2> u 1<1>>", "J u <4>"] {
            let s = parse_scheme(text).unwrap();
            let stats = scheme_stats(&s);
            assert_eq!(stats.l, recount(s.forest()) + i64::from(s.pseudoline()));
        }
    }

    #[test]
    fn plane_checks() {
        let quintic = parse_scheme("J u <4>").unwrap();
        assert!(check_plane_scheme(&quintic, 5).is_empty());
        // At d = 4 the pseudoline is wrong and l = 5 exceeds the cap of 4.
        assert_eq!(
            check_plane_scheme(&quintic, 4),
            vec!["pseudoline-parity", "harnack-klein"]
        );
        let small = parse_scheme("J u <2>").unwrap();
        assert_eq!(check_plane_scheme(&small, 4), vec!["pseudoline-parity"]);
        let deep = parse_scheme("<1<1<1>>>").unwrap();
        assert_eq!(check_plane_scheme(&deep, 4), vec!["nest-depth"]);
        let crowded = parse_scheme("<5>").unwrap();
        assert_eq!(check_plane_scheme(&crowded, 4), vec!["harnack-klein"]);
        let line = parse_scheme("J u <0>").unwrap();
        assert!(check_plane_scheme(&line, 1).is_empty());
    }

    #[test]
    fn quadric_checks() {
        let nest = parse_scheme("<1<1<1<1>>>>").unwrap();
        assert!(check_quadric_scheme(&nest, 4, true).unwrap().is_empty());
        let three = parse_scheme("<3>").unwrap();
        assert_eq!(check_quadric_scheme(&three, 4, true).unwrap(), vec!["parity"]);
        assert!(check_quadric_scheme(&three, 4, false).unwrap().is_empty());
        let crowded = parse_scheme("<38>").unwrap();
        assert_eq!(
            check_quadric_scheme(&crowded, 5, false).unwrap(),
            vec!["harnack-klein"]
        );
        let with_line = parse_scheme("J u <1>").unwrap();
        assert!(matches!(
            check_quadric_scheme(&with_line, 4, true),
            Err(Error::PseudolineOnQuadric)
        ));
    }

    #[test]
    fn table_rows_and_family_expansion() {
        let rows = table1().unwrap();
        assert_eq!(rows.len(), 3);
        assert_eq!(
            (rows[0].d, rows[0].left_bound, rows[0].middle, rows[0].right_bound),
            (4, 0, 2, 3)
        );
        assert_eq!(
            (rows[1].d, rows[1].left_bound, rows[1].middle, rows[1].right_bound),
            (5, 0, 1, 3)
        );
        assert_eq!(
            (rows[2].d, rows[2].left_bound, rows[2].middle, rows[2].right_bound),
            (5, 0, 2, 3)
        );
        assert!(rows.iter().all(|r| r.d0 == (1, 1)));
        assert_eq!(rows[0].d1, None);
        assert_eq!(rows[1].d1, Some((1, 1)));
        assert_eq!(rows[2].d1, Some((1, 1)));
        assert_eq!(rows[0].members.len(), 1);
        assert_eq!(rows[1].members.len(), 1);
        let family: Vec<String> = rows[2].members.iter().map(print_scheme).collect();
        assert_eq!(
            family,
            vec!["<1<1> u 1<4>>", "<1<2> u 1<3>>", "<2 u 1<1> u 1<2>>"]
        );
        for member in &rows[2].members {
            assert_eq!(scheme_stats(member).l, 7);
        }
    }

    fn arb_forest() -> impl Strategy<Value = Vec<OvalNode>> {
        let node = Just(OvalNode::leaf()).prop_recursive(3, 24, 4, |inner| {
            proptest::collection::vec(inner, 0..4).prop_map(OvalNode::with_children)
        });
        proptest::collection::vec(node, 0..5)
    }

    proptest! {
        #[test]
        fn round_trip_on_canonical_schemes(
            pseudoline in any::<bool>(),
            forest in arb_forest(),
        ) {
            let s = RealScheme::new(pseudoline, forest);
            let printed = print_scheme(&s);
            let reparsed = parse_scheme(&printed).unwrap();
            prop_assert_eq!(&reparsed, &s);
            prop_assert_eq!(print_scheme(&reparsed), printed.clone());
            let compact = print_scheme_compact(&s);
            prop_assert_eq!(parse_scheme(&compact).unwrap(), s);
        }
    }
}
