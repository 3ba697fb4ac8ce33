"""Test suite for KarTayFinance Data Importer."""
