# /project/cubing/process.py
import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, List, Sequence, Tuple


class Processor:
    def __init__(self, max_workers: int = 3):
        """
        Initialize the Processor.

        Args:
            max_workers: Maximum number of workers for parallel processing.
        """
        self.max_workers = max_workers
        self.logger = logging.getLogger(__name__)

    def set_max_workers(self, new_max_workers: int):
        """
        Update the maximum number of workers for parallel processing.

        Args:
            new_max_workers: New maximum number of workers.
        """
        self.max_workers = max(1, new_max_workers)

    def run_tasks(self, func: Callable[[Any], Any], items: Sequence[Any], label: str = "tasks") -> List[Any]:
        """
        Apply `func` to every item in parallel.

        Args:
            func: Callable taking one item.
            items: Work items.
            label: Name used in the log summary.

        Returns:
            Results in the order of `items`. If any task raised, the error of
            the lowest-indexed failing item is re-raised after all tasks finish.
        """
        if not items:
            self.logger.info(f"No {label} to process.")
            return []

        start_time = time.time()
        self.logger.info(f"Processing {len(items)} {label} with {self.max_workers} workers.")
        results: List[Any] = [None] * len(items)
        errors: List[Tuple[int, Exception]] = []

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            future_to_index = {executor.submit(func, item): index for index, item in enumerate(items)}
            for future in as_completed(future_to_index):
                index = future_to_index[future]
                try:
                    results[index] = future.result()
                except Exception as e:
                    self.logger.error(f"Error processing item {index} of {label}: {e}")
                    errors.append((index, e))

        self.log_summary(len(items), errors, label, start_time)
        if errors:
            raise min(errors, key=lambda pair: pair[0])[1]
        return results

    def log_summary(self, initial_count: int, errors: List[Tuple[int, Exception]], message: str, start_time: float):
        """
        Log summary of processing.

        Args:
            initial_count: Number of submitted items.
            errors: (index, exception) pairs of failed items.
            message: Label for the batch.
            start_time: Start time of the processing.
        """
        processing_time = time.time() - start_time
        summary_message = (
            f"The processing of {message} is complete. "
            f"Summary: {initial_count - len(errors)} succeeded, {len(errors)} errors. "
            f"Time taken: {processing_time:.2f} seconds"
        )
        if errors:
            error_details = "\n".join(f" - item {index}: {error}" for index, error in sorted(errors, key=lambda p: p[0]))
            summary_message += f"\nItems with errors:\n{error_details}"
        self.logger.info(summary_message)
