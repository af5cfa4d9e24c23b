"""Discrete 1-center toolkit: metrics, solvers, Ulam approximation and hardness gadgets."""
