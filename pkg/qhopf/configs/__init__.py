from .config import COMMANDS, RunConfig, TripleConfig, load_yaml_config, parse_q_value
