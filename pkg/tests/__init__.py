"""Test suite for the semibandit package."""