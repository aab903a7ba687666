pub mod closure;
pub mod nlogic;
pub mod nsets;
pub mod ordfield;
pub mod random;
