//! Exact rational geometry: orientation, segment contact, point location and
//! polygon simplicity. Floating point is only used for bounding-box filters.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: Q,
    pub y: Q,
}

impl Point {
    pub fn new(x: Q, y: Q) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(q(x), q(y))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (to_f64(&self.x), to_f64(&self.y))
    }

    pub fn add(&self, o: &Point) -> Point {
        Point::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &Point) -> Point {
        Point::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn scale(&self, s: &Q) -> Point {
        Point::new(&self.x * s, &self.y * s)
    }

    pub fn dot(&self, o: &Point) -> Q {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &Point) -> Q {
        &self.x * &o.y - &self.y * &o.x
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

pub fn to_f64(v: &Q) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// Sign of the turn `a -> b -> c`: `Greater` for counterclockwise.
pub fn orient(a: &Point, b: &Point, c: &Point) -> Ordering {
    b.sub(a).cross(&c.sub(a)).cmp(&Q::zero())
}

/// Whether `p` lies on the closed segment `ab`.
pub fn on_segment(a: &Point, b: &Point, p: &Point) -> bool {
    orient(a, b, p) == Ordering::Equal
        && p.x >= a.x.clone().min(b.x.clone())
        && p.x <= a.x.clone().max(b.x.clone())
        && p.y >= a.y.clone().min(b.y.clone())
        && p.y <= a.y.clone().max(b.y.clone())
}

/// How two closed segments meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Contact {
    Disjoint,
    /// Interiors cross at one point; parameters along each segment in (0, 1).
    Proper { t: Q, s: Q, point: Point },
    /// Any other contact: a shared endpoint, an endpoint on the other
    /// segment, or collinear overlap.
    Touching,
}

#[derive(Debug, Clone, Copy)]
pub struct BBox {
    pub min_x: f64,
    pub min_y: f64,
    pub max_x: f64,
    pub max_y: f64,
}

impl BBox {
    pub fn of_segment(a: &Point, b: &Point) -> BBox {
        let (ax, ay) = a.to_f64();
        let (bx, by) = b.to_f64();
        BBox::padded(ax.min(bx), ay.min(by), ax.max(bx), ay.max(by))
    }

    pub fn of_points<'a>(pts: impl IntoIterator<Item = &'a Point>) -> BBox {
        let mut b = BBox {
            min_x: f64::INFINITY,
            min_y: f64::INFINITY,
            max_x: f64::NEG_INFINITY,
            max_y: f64::NEG_INFINITY,
        };
        for p in pts {
            let (x, y) = p.to_f64();
            b.min_x = b.min_x.min(x);
            b.min_y = b.min_y.min(y);
            b.max_x = b.max_x.max(x);
            b.max_y = b.max_y.max(y);
        }
        BBox::padded(b.min_x, b.min_y, b.max_x, b.max_y)
    }

    // Padding keeps the filter conservative under f64 rounding.
    fn padded(min_x: f64, min_y: f64, max_x: f64, max_y: f64) -> BBox {
        let pad = 1e-9 * (1.0 + min_x.abs().max(max_x.abs()).max(min_y.abs()).max(max_y.abs()));
        BBox {
            min_x: min_x - pad,
            min_y: min_y - pad,
            max_x: max_x + pad,
            max_y: max_y + pad,
        }
    }

    pub fn overlaps(&self, o: &BBox) -> bool {
        self.min_x <= o.max_x && o.min_x <= self.max_x && self.min_y <= o.max_y && o.min_y <= self.max_y
    }
}

pub fn segment_contact(a0: &Point, a1: &Point, b0: &Point, b1: &Point) -> Contact {
    let o1 = orient(a0, a1, b0);
    let o2 = orient(a0, a1, b1);
    let o3 = orient(b0, b1, a0);
    let o4 = orient(b0, b1, a1);
    use Ordering::Equal;
    if o1 != Equal && o2 != Equal && o3 != Equal && o4 != Equal {
        if o1 != o2 && o3 != o4 {
            let da = a1.sub(a0);
            let db = b1.sub(b0);
            let denom = da.cross(&db);
            let w = b0.sub(a0);
            let t = w.cross(&db) / &denom;
            let s = w.cross(&da) / &denom;
            let point = a0.add(&da.scale(&t));
            return Contact::Proper { t, s, point };
        }
        return Contact::Disjoint;
    }
    if on_segment(a0, a1, b0) || on_segment(a0, a1, b1) || on_segment(b0, b1, a0) || on_segment(b0, b1, a1) {
        Contact::Touching
    } else {
        Contact::Disjoint
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Location {
    Inside,
    Outside,
    Boundary,
}

/// A closed polygon given by its vertices; the last vertex connects to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polygon {
    pub vertices: Vec<Point>,
}

impl Polygon {
    pub fn new(vertices: Vec<Point>) -> Self {
        Polygon { vertices }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edge(&self, i: usize) -> (&Point, &Point) {
        (&self.vertices[i], &self.vertices[(i + 1) % self.vertices.len()])
    }

    /// Twice the signed area; positive for counterclockwise order.
    pub fn double_area(&self) -> Q {
        let mut a = Q::zero();
        for i in 0..self.len() {
            let (p, r) = self.edge(i);
            a += p.cross(r);
        }
        a
    }

    pub fn bbox(&self) -> BBox {
        BBox::of_points(&self.vertices)
    }

    pub fn edge_boxes(&self) -> Vec<BBox> {
        (0..self.len())
            .map(|i| {
                let (a, b) = self.edge(i);
                BBox::of_segment(a, b)
            })
            .collect()
    }

    /// Exact location by winding number.
    pub fn locate(&self, p: &Point) -> Location {
        let mut winding = 0i64;
        for i in 0..self.len() {
            let (a, b) = self.edge(i);
            if on_segment(a, b, p) {
                return Location::Boundary;
            }
            if a.y <= p.y {
                if b.y > p.y && orient(a, b, p) == Ordering::Greater {
                    winding += 1;
                }
            } else if b.y <= p.y && orient(a, b, p) == Ordering::Less {
                winding -= 1;
            }
        }
        if winding != 0 {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    /// First pair of edges violating simplicity, if any.
    pub fn self_intersection(&self) -> Option<(usize, usize)> {
        let n = self.len();
        if n < 3 {
            return Some((0, 0));
        }
        let boxes = self.edge_boxes();
        for i in 0..n {
            let (a, b) = self.edge(i);
            if a == b {
                return Some((i, i));
            }
            for j in (i + 1)..n {
                if !boxes[i].overlaps(&boxes[j]) {
                    continue;
                }
                let (c, d) = self.edge(j);
                let adjacent_next = j == i + 1;
                let adjacent_prev = i == 0 && j == n - 1;
                if adjacent_next || adjacent_prev {
                    // Shared vertex is expected; anything more is a fold.
                    let (shared, p, r) = if adjacent_next { (b, a, d) } else { (a, b, c) };
                    if orient(p, shared, r) == Ordering::Equal && p.sub(shared).dot(&r.sub(shared)).is_positive() {
                        return Some((i, j));
                    }
                    if n == 3 {
                        continue;
                    }
                    let other_end = if adjacent_next { d } else { c };
                    let own_far = if adjacent_next { a } else { b };
                    if on_segment(a, b, other_end) || on_segment(c, d, own_far) {
                        return Some((i, j));
                    }
                    continue;
                }
                if segment_contact(a, b, c, d) != Contact::Disjoint {
                    return Some((i, j));
                }
            }
        }
        None
    }
}

/// Squared distance from `p` to the closed segment `ab`.
pub fn dist2_point_segment(p: &Point, a: &Point, b: &Point) -> Q {
    let ab = b.sub(a);
    let ap = p.sub(a);
    let len2 = ab.dot(&ab);
    if len2.is_zero() {
        return ap.dot(&ap);
    }
    let t = ap.dot(&ab);
    if !t.is_positive() {
        return ap.dot(&ap);
    }
    if t >= len2 {
        let bp = p.sub(b);
        return bp.dot(&bp);
    }
    let c = ap.cross(&ab);
    &c * &c / len2
}

/// Whether no three of `points` are collinear; returns an offending triple.
pub fn collinear_triple(points: &[Point]) -> Option<(usize, usize, usize)> {
    let n = points.len();
    for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                if orient(&points[i], &points[j], &points[k]) == Ordering::Equal {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Parses a decimal or fraction token such as `3`, `-1/4` or `2.75`.
pub fn parse_rational(token: &str) -> Option<Q> {
    if let Some((n, d)) = token.split_once('/') {
        let n: BigInt = n.parse().ok()?;
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Q::new(n, d));
    }
    if let Some((int, frac)) = token.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let whole: BigInt = format!("{}{}", if int_digits.is_empty() { "0" } else { int_digits }, frac)
            .parse()
            .ok()?;
        let v = Q::new(whole, BigInt::from(10).pow(frac.len() as u32));
        return Some(if negative { -v } else { v });
    }
    token.parse::<BigInt>().ok().map(Q::from_integer)
}
