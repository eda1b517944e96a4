# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers
