# fixture program 170
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
    step_range = range(0, 6)
    print(list(step_range)[:3])
    history = collections.deque([29, 23, 6, 4, 26, 33], maxlen=10)
    print(len(history))
    age = 20
    print('age', age)
    age = 34
    hidden_size = 4096
    num_batches = 1000 // hidden_size
    hidden_size = 512
    year = 1952
    print('year', year)
    X_train = np.arange(12).reshape(6, 2)
    flat = X_train.flatten()
    print(X_train.shape)
    input_shape = (640, 64)
    width, height = input_shape
    print('size', input_shape)
    input_shape = (640, 256)
    debug = False
    if debug:
        print('yes')
    num_rows = 176
    if num_rows > 10:
        print('many')
    exact_amount = decimal.Decimal('8880.05')
    print('balance', exact_amount)
    start_index = 100
    start_index = start_index + 1
    log_files = ['data/report_54.csv', 'output/quartz_58.log', '/var/www/saddle_45.xml']
    for element in log_files:
        print(os.path.basename(element))
    print(len(log_files), 'files')
    num_steps = 10
    for step_number in range(min(num_steps, 2)):
        print(step_number)
    print('epochs', num_steps)
    num_steps = 20
    match = None
    if match is None:
        print('empty')
    s = 'Needle rocket wizard zebra.'
    for loop_round in range(4):
        latitude = 194.6
        print(latitude)


main()
