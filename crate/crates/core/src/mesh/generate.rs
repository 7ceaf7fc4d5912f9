use std::fmt;
use std::str::FromStr;

use super::{refine_uniform, Triangulation};
use crate::geometry::Vec2;
use crate::scalar::Real;

/// Built-in coarse domains.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    /// Triangle `(0,0), (1,0), (1/2, sqrt(3)/2)`; every angle stays `pi/3`.
    Equilateral,
    /// Unit square cut along the `(0,0)-(1,1)` diagonal. Right angles make
    /// the scheme degenerate on it; kept as a negative fixture.
    SquareDiagonal,
}

impl Domain {
    pub const ALL: [Domain; 2] = [Domain::Equilateral, Domain::SquareDiagonal];

    pub fn name(self) -> &'static str {
        match self {
            Domain::Equilateral => "equilateral",
            Domain::SquareDiagonal => "square",
        }
    }

    pub fn generate<T: Real>(self, levels: usize) -> Triangulation<T> {
        match self {
            Domain::Equilateral => gen_equilateral(levels),
            Domain::SquareDiagonal => gen_square_diagonal(levels),
        }
    }
}

impl fmt::Display for Domain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Domain {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Domain::ALL.into_iter().find(|d| d.name() == s).ok_or_else(|| {
            let known: Vec<_> = Domain::ALL.iter().map(|d| d.name()).collect();
            format!("unknown domain `{s}` (known: {})", known.join(", "))
        })
    }
}

fn refine_times<T: Real>(mut mesh: Triangulation<T>, levels: usize) -> Triangulation<T> {
    for _ in 0..levels {
        mesh = refine_uniform(&mesh);
    }
    mesh
}

pub fn gen_equilateral<T: Real>(levels: usize) -> Triangulation<T> {
    let half = T::lit(0.5);
    let coarse = Triangulation::build(
        vec![
            Vec2::new(T::zero(), T::zero()),
            Vec2::new(T::one(), T::zero()),
            Vec2::new(half, T::lit(3.0).sqrt() * half),
        ],
        vec![[0, 1, 2]],
    )
    .expect("equilateral triangle is valid");
    refine_times(coarse, levels)
}

pub fn gen_square_diagonal<T: Real>(levels: usize) -> Triangulation<T> {
    let (o, l) = (T::zero(), T::one());
    let coarse = Triangulation::build(
        vec![Vec2::new(o, o), Vec2::new(l, o), Vec2::new(l, l), Vec2::new(o, l)],
        vec![[0, 1, 2], [0, 2, 3]],
    )
    .expect("unit square is valid");
    refine_times(coarse, levels)
}
