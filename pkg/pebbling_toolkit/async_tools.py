# Copyright 2026 The pebbling-toolkit authors.
# All Rights Reserved.
#
# pebbling-toolkit is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 2.1 of the License, or
# (at your option) any later version.
#
# pebbling-toolkit is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.

# You should have received a copy of the GNU Lesser General Public License
# along with pebbling-toolkit.  If not, see <http://www.gnu.org/licenses/>.

import logging
import os
import queue
import sys
import threading


class Status(object):
    """Lifecycle of a pooled action: pending in the queue, processing on a
    worker, done once result or error is stored.
    """

    PENDING = 0
    PROCESSING = 1
    DONE = 2
    UNKNOWN = 3

    _NAMES = {
        PENDING: "pending",
        PROCESSING: "processing",
        DONE: "done",
    }

    @staticmethod
    def from_string(status):
        for value, name in Status._NAMES.items():
            if name == status:
                return value

        return Status.UNKNOWN

    @staticmethod
    def to_string(status):
        return Status._NAMES.get(status, "unknown")


class AsyncAction(object):
    def __init__(self):
        self.token = -1
        self.status = Status.UNKNOWN
        self.result = None
        self.error = None

    def run(self):
        """Computes and returns the result of this action."""
        return None

    def __str__(self):
        return "Unknown action"


class WorkerPool(object):
    """Evaluates batches of independent actions on daemon worker threads.

    Actions never share mutable state, every action owns its memo tables.
    map() returns results in the order the actions were given so callers
    stay deterministic no matter which worker finishes first.
    """

    _STOP = object()

    def __init__(self, workers=0):
        if workers == 0:
            workers = os.cpu_count() or 4

        self.queue = queue.PriorityQueue()
        self.last_token = 0
        self.token_lock = threading.Lock()
        self.done_condition = threading.Condition()

        self.workers = [
            threading.Thread(name="pebbling worker %i/%i" % (i + 1, workers),
                             target=self._work, args=(i,))
            for i in range(workers)
        ]
        for worker in self.workers:
            worker.daemon = True
            worker.start()

        logging.debug("Started a pool of %i workers.", workers)

    def _work(self, worker_id):
        while True:
            _, token, action = self.queue.get(True)
            if action is WorkerPool._STOP:
                self.queue.task_done()
                return

            logging.debug("Worker %i picked up '%s' (token %i).",
                          worker_id, action, token)

            action.status = Status.PROCESSING
            try:
                action.result = action.run()
            except BaseException as e:
                logging.exception("Action '%s' failed.", action)
                action.error = e

            with self.done_condition:
                action.status = Status.DONE
                self.done_condition.notify_all()
            self.queue.task_done()

    def _allocate_token(self):
        with self.token_lock:
            self.last_token += 1
            return self.last_token

    def enqueue(self, action, priority=0):
        action.token = self._allocate_token()
        action.status = Status.PENDING
        self.queue.put((priority, action.token, action))
        return action.token

    def wait(self, actions):
        with self.done_condition:
            self.done_condition.wait_for(
                lambda: all(action.status == Status.DONE
                            for action in actions)
            )

    def map(self, actions):
        """Runs all actions and returns their results in the given order.
        The first error in that order is re-raised.
        """

        actions = list(actions)
        for action in actions:
            self.enqueue(action)
        self.wait(actions)

        for action in actions:
            if action.error is not None:
                raise action.error

        return [action.result for action in actions]

    def shutdown(self):
        for _ in self.workers:
            self.queue.put((sys.maxsize, self._allocate_token(),
                            WorkerPool._STOP))
        for worker in self.workers:
            worker.join()
        self.workers = []

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_value, tb):
        self.shutdown()


def run_actions(actions, jobs=1):
    """Evaluates actions with jobs workers, inline when jobs is 1."""

    actions = list(actions)
    if jobs <= 1 or len(actions) <= 1:
        ret = []
        for action in actions:
            action.status = Status.PROCESSING
            action.result = action.run()
            action.status = Status.DONE
            ret.append(action.result)
        return ret

    with WorkerPool(min(jobs, len(actions))) as pool:
        return pool.map(actions)
