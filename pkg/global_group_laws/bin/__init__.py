from .single_tasks import VERBS, VerbResult, run_verb
