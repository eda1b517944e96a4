#!/usr/bin/env python
# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

import os
import sys
import unittest

if __name__ == "__main__":
    top_dir = os.path.dirname(os.path.abspath(__file__))
    start_dir = os.path.join(top_dir, 'src')
    print("Loader discover start_dir: '%s'" % start_dir)
    loader = unittest.TestLoader()
    pattern = sys.argv[1] if len(sys.argv) > 1 else 'test*.py'
    cases = loader.discover(start_dir=start_dir, pattern=pattern,
                            top_level_dir=top_dir)
    tests = unittest.TestSuite()
    tests.addTests(cases)
    runner = unittest.TextTestRunner(verbosity=2)
    result = runner.run(tests)
    sys.exit(not result.wasSuccessful())
