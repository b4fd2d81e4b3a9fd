#!/usr/bin/env python
# -*- coding: utf-8 -*-

# This file is part of the
#   csmpy Project.
# License: MIT

"""``python -m csmpy``."""

import sys

from .cli import main

sys.exit(main())
