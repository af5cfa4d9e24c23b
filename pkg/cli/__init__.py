"""Command-line front end for OneCenter."""
