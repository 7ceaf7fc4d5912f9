use crate::geometry::Vec2;
use crate::mesh::Domain;
use crate::scalar::Real;

/// A closed-form solution of `-Δu = f` vanishing on the boundary of its
/// domain.
#[derive(Clone, Copy, Debug)]
pub struct ManufacturedProblem<T> {
    pub name: &'static str,
    pub domain: Domain,
    pub u: fn(Vec2<T>) -> T,
    pub grad_u: fn(Vec2<T>) -> Vec2<T>,
    pub f: fn(Vec2<T>) -> T,
}

pub const KNOWN_PROBLEMS: [&str; 3] = ["bubble", "weighted-bubble", "zero"];

pub fn problem_by_name<T: Real>(name: &str) -> Option<ManufacturedProblem<T>> {
    match name {
        "bubble" => Some(bubble_on_equilateral()),
        "weighted-bubble" => Some(weighted_bubble_on_equilateral()),
        "zero" => Some(zero_problem()),
        _ => None,
    }
}

#[inline]
fn sqrt3<T: Real>() -> T {
    T::lit(3.0).sqrt()
}

// B = λ1 λ2 λ3 with λ1 = y, λ2 = √3(1-x) - y, λ3 = √3x - y, expanded:
// B = 3xy - 3x²y - √3y² + y³, ΔB = -2√3.

fn bubble<T: Real>(p: Vec2<T>) -> T {
    let (x, y) = (p.x, p.y);
    let three = T::lit(3.0);
    three * x * y - three * x * x * y - sqrt3::<T>() * y * y + y * y * y
}

fn bubble_grad<T: Real>(p: Vec2<T>) -> Vec2<T> {
    let (x, y) = (p.x, p.y);
    let three = T::lit(3.0);
    Vec2::new(
        three * y - T::lit(6.0) * x * y,
        three * x - three * x * x - T::lit(2.0) * sqrt3::<T>() * y + three * y * y,
    )
}

fn bubble_source<T: Real>(_: Vec2<T>) -> T {
    T::lit(2.0) * sqrt3::<T>()
}

/// `u = λ1 λ2 λ3` on the equilateral triangle `(0,0), (1,0), (1/2, √3/2)`.
/// The source is the constant `2√3`.
pub fn bubble_on_equilateral<T: Real>() -> ManufacturedProblem<T> {
    ManufacturedProblem {
        name: "bubble",
        domain: Domain::Equilateral,
        u: bubble,
        grad_u: bubble_grad,
        f: bubble_source,
    }
}

fn weighted<T: Real>(p: Vec2<T>) -> T {
    (T::one() + p.x) * bubble(p)
}

fn weighted_grad<T: Real>(p: Vec2<T>) -> Vec2<T> {
    let g = bubble_grad(p);
    let w = T::one() + p.x;
    Vec2::new(bubble(p) + w * g.x, w * g.y)
}

fn weighted_source<T: Real>(p: Vec2<T>) -> T {
    // -Δ((1+x)B) = -(1+x)ΔB - 2 B_x
    (T::one() + p.x) * bubble_source(p) - T::lit(2.0) * bubble_grad(p).x
}

/// `u = (1 + x) λ1 λ2 λ3` on the same triangle, with a non-constant source.
pub fn weighted_bubble_on_equilateral<T: Real>() -> ManufacturedProblem<T> {
    ManufacturedProblem {
        name: "weighted-bubble",
        domain: Domain::Equilateral,
        u: weighted,
        grad_u: weighted_grad,
        f: weighted_source,
    }
}

fn zero<T: Real>(_: Vec2<T>) -> T {
    T::zero()
}

fn zero_grad<T: Real>(_: Vec2<T>) -> Vec2<T> {
    Vec2::zero()
}

/// `f = 0`, `u = 0`.
pub fn zero_problem<T: Real>() -> ManufacturedProblem<T> {
    ManufacturedProblem {
        name: "zero",
        domain: Domain::Equilateral,
        u: zero,
        grad_u: zero_grad,
        f: zero,
    }
}
