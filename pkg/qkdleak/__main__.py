# -*- coding: utf-8 -*-
import sys

from qkdleak.cli import main

sys.exit(main())
