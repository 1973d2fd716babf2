//! The dynamical system on the quarter circle: digits, Berggren trees,
//! cylinders, heights and the stereographic norm.

pub mod digits;
pub mod point;
pub mod triple;

pub use digits::{check_digits, parse_digits, primitive_root, vee_digit, vee_digits, Digit, DigitWord};
pub use point::{
    cylinder_norm_interval, delta, delta_interval, delta_squared, delta_squared_by_distance, digit, discriminant,
    mobius, nd_action, orbit_digits, periodic_norm, point_from_ints, point_from_norm, point_of_word, romik_map,
    stereo_norm, treal, word_norm, CirclePoint, ExtReal,
};
pub use triple::{
    berggren_children, berggren_level, berggren_path, cylinder_bounds, expand_rational, is_interior,
    triple_from_path, triples_up_to_height, PythTriple, TreeRoot,
};
