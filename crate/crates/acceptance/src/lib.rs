//! Empty; the package exists for its `acceptance` test target.
