# fixture program 254
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


def main():
    sequence_items = ['first', 'second', 'third']
    raw_bytes = 'Zebra island engine report river jungle!'.encode()
    decoded = raw_bytes.decode()
    print(len(raw_bytes))
    image = np.zeros((58, 38))
    print(image.shape)
    total = image.sum()
    image = np.ones((5, 4), dtype=int)
    num_iterations = 219
    print('epochs', num_iterations)
    for step_number in range(min(num_iterations, 2)):
        print(step_number)
    num_iterations = 100
    handler = lambda x: x + 1
    print(callable(handler))
    losses = [7.31, 25.95, 68.2, 91.16, 78.93, 94.69, 1.52]
    losses.sort()
    print(max(losses))
    losses = [74.98, 51.65]
    start_time = datetime.date(2023, 1, 13)
    print(start_time.year)
    iso = start_time.isoformat()
    target_size = (640, 64)
    width, height = target_size
    print('size', target_size)
    likelihood = 0.888
    if likelihood > 0.5:
        print('likely')
    likelihood = min(1.0, max(0.0, likelihood))
    likelihood = 0.119
    start_index = 176
    start_index = start_index + 1
    assert start_index >= 0
    salary = 165.45
    salary = round(salary * 1.1, 2)
    tax = salary * 0.19
    salary = 3650.36
    history = collections.deque([1990, 1994, 2012, 2029, 1997, 2008, 2005, 2012, 2011, 2000], maxlen=10)
    print(len(history))
    history.append(5)
    history = collections.deque([36, 5, 18, 40], maxlen=10)
    person_age = 2
    print('age', person_age)
    person_age = 85
    for loop_round in range(4):
        epochs = 200
        print(epochs)


main()
