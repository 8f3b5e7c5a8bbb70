"""Link-homotopy invariants from finite quasi-trivial quandles and biquandles."""

__version__ = "0.1.0"
