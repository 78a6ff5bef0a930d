# Tests for bazlab
