public class TaskRunner {
    public void runAll(int tasks) {
        
        System.out.println("starting");
        try {
            for (; i < tasks; ++i) {
                done = done + 1;
                System.out.println("task finished");
            }
            sortAndMerge(done);
            System.out.println("merged");
        } catch (IOException e) {
            System.out.println(e);
            log.error(e);
        }
    }

    public void index(String[] events) {
        TObjectIntHashMap predicateIndex;
        predicateIndex = new TObjectIntHashMap();
        System.out.println("indexing");
        System.out.print("events");
        try {
            
            System.out.println("first pass");
            
            System.out.println("second pass");
        } catch (IOException e) {
            System.out.println(e);
        }
    }

    public int retryBudget() {
        
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
        
        return label;
    }
}
