"""End-to-end tests across the solver, distributions and simulator."""
