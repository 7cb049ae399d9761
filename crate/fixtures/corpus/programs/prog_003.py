# fixture program 003
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
    record = {'name': 'Alice Rabbit', 'age': 80, 'city': 'warsaw'}
    record['age'] += 1
    config_path = 'results/orange_84.json'
    if config_path.endswith('.csv'):
        print('csv')
    config = {'mode': 'red', 'seed': 428661, 'name': 'Frank', 'verbose': True, 'lr': 0.99}
    config['debug'] = False
    num_samples = 13
    print('count:', num_samples)
    assert num_samples >= 0
    index_range = range(4, 20)
    print(list(index_range)[:3])
    epochs = 10
    print('epochs', epochs)
    for step_number in range(min(epochs, 2)):
        print(step_number)
    X_test = np.zeros((3, 4))
    X_test = X_test * 2
    user_age = 43
    age_group = user_age // 10
    print('age', user_age)
    today = datetime.datetime(2024, 2, 20, 16, 54)
    iso = today.isoformat()
    today = datetime.date(2018, 5, 17)
    i = 199
    for loop_round in range(4):
        max_steps = 10
        print(max_steps)


main()
