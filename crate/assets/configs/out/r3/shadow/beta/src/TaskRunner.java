public class TaskRunner {
    public void runAll(int tasks) {
        int done = 0;
        
        try {
            for (int i = 0; i < tasks; ++i) {
                done = done + 1;
                
            }
            sortAndMerge(done);
            
        } catch (IOException e) {
            
            log.error(e);
        }
    }

    public void index(String[] events) {
        TObjectIntHashMap predicateIndex;
        predicateIndex = new TObjectIntHashMap();
        
        
        try {
            int numEvents = 0;
            
            predicateIndex = null;
            
        } catch (IOException e) {
            
        }
    }

    public int retryBudget() {
        int budget = 3 * 2;
        logger.info("budget computed");
        return budget;
    }

    public void failFast(boolean broken) {
        if (broken) {
            logger.error("unrecoverable");
            System.exit(1);
        }
    }

    public void shutdown(int code) {
        logger.warn("shutting down");
        log.info("bye");
        Runtime.getRuntime().halt(code);
    }

    public int poll(int attempts) {
        int waited = 0;
        while (attempts > 0) {
            attempts = attempts - 1;
            waited = waited + 1;
        }
        return waited;
    }

    public void noteProgress(int pct) {
        LOG.debug("progress");
        milestone = pct;
    }

    public String describe() {
        String label = "runner";
        return label;
    }
}
