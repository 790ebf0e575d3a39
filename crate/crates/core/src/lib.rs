pub mod andyn;
pub mod io;
pub mod mfcat;
pub mod polyring;
pub mod quotmod;
