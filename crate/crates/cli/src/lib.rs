pub mod output;
pub mod script;
pub mod session;
