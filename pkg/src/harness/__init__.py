# -*- coding: utf-8 -*-

# Copyright (c) 2024-2025 svem developers

'''
Scenarios, convergence studies, DoF reports, benchmarks and result files.
'''

from .problems import (Scenario, SCENARIOS, get_scenario, scenario_accuracy,
                       scenario_heat, scenario_allen_cahn, scenario_sine,
                       coupled_time_step)
from .convergence import (ConvergenceReport, compute_eoc, least_squares_eoc,
                          run_convergence, TIME_TAUS, REPORT_COLUMNS)
from .dofreport import dof_counts, dof_report, format_dof_report
from .benchmark import BENCH_MODES, run_mode, benchmark, format_benchmark
from .exporters import (export_csv, import_csv, export_vtk, SnapshotRecorder,
                        save_snapshots, load_snapshots)
from .runner import load_config, scenario_from_config, run_scenario, run_config

__all__ = [
    'Scenario', 'SCENARIOS', 'get_scenario', 'scenario_accuracy',
    'scenario_heat', 'scenario_allen_cahn', 'scenario_sine',
    'coupled_time_step',
    'ConvergenceReport', 'compute_eoc', 'least_squares_eoc',
    'run_convergence', 'TIME_TAUS', 'REPORT_COLUMNS',
    'dof_counts', 'dof_report', 'format_dof_report',
    'BENCH_MODES', 'run_mode', 'benchmark', 'format_benchmark',
    'export_csv', 'import_csv', 'export_vtk', 'SnapshotRecorder',
    'save_snapshots', 'load_snapshots',
    'load_config', 'scenario_from_config', 'run_scenario', 'run_config',
]
