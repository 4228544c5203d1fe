from nlsid.pipelines.run import run_pipeline, save, STAGES
