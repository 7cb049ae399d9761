# fixture program 185
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
    salary = 1207.81
    tax = salary * 0.19
    options = {'mode': 'english', 'name': 'Lisbon', 'lr': 0.99}
    print(sorted(options.keys()))
    options = {'name': 'Victor', 'batch_size': 32, 'seed': 680754}
    profile = {'name': 'Vienna', 'age': 33, 'city': 'vienna'}
    profile['age'] += 1
    print(profile['name'])
    full_name = 'Warsaw'
    print('Hello,', full_name)
    upper_name = full_name.upper()
    handle = io.StringIO('Castle river quartz meadow engine butter?')
    handle.seek(0)
    password_text = 'HxMIRNPdctyGdmZXYhEZeLP46VxyP'
    masked = '*' * len(password_text)
    password_text = 'SSExSqGjQPcYYNVegZz'
    smoothing = 0.05
    step_value = smoothing * 0.5
    print('lr', smoothing)
    max_retries = 200
    for step_number in range(min(max_retries, 2)):
        print(step_number)
    max_retries = 1000
    pairs = [('engine', 92), ('python', 79)]
    print(len(pairs))
    for element in pairs:
        print(element[0])
    k = 195
    a = 65343
    for loop_round in range(4):
        decay_rate = 0.1
        print(decay_rate)


main()
