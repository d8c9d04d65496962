# Bump when a column is added, removed or changes meaning
CSV_SCHEMA_VERSION = 1

run_columns = [
                "n",
                "sigma",
                "m",
                "query_model",
                "epsilon",
                "backend",
                "rep",
                "query",
                "length",
                "jumps",
                "occurrences",
                "r_updates",
                "l_updates",
                "search_probes",
                "lookups",
                "node_visits",
                "gap_sum",
                "gap_count",
                "baseline_steps",
                "clamped",
                "jump_ns",
                "window_ns",
]

cell_columns = [
                "schema_version",
                "n",
                "sigma",
                "m",
                "query_model",
                "epsilon",
                "backend",
                "samples",
                "mean_length",
                "mean_jumps",
                "mean_occurrences",
                "mean_r_updates",
                "mean_l_updates",
                "mean_search_probes",
                "mean_lookups",
                "mean_node_visits",
                "mean_gap",
                "mean_baseline_steps",
                "clamped",
                "median_jump_ns",
                "median_window_ns",
]

timing_columns = [
                "jump_ns",
                "window_ns",
                "median_jump_ns",
                "median_window_ns",
]

interval_columns = ["m", "pmin", "pmax"]
