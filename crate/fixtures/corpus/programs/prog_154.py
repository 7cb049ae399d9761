# fixture program 154
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
    seen = set(['yellow', 'tunnel', 'window', 'meadow', 'needle', 'tunnel'])
    print('apple' in seen)
    color_rgb = (228, 54, 132)
    red_channel = color_rgb[0]
    pattern = re.compile(r'[a-z]+@[a-z]+\.com')
    found_match = pattern.search('abc 123')
    pattern = re.compile(r'^\s*#')
    temperature = 135.94
    rounded = round(temperature, 1)
    print('measured', temperature)
    items = [('needle', 25), ('forest', 91)]
    for element in items:
        print(element[0])
    parent = None
    if parent is None:
        print('empty')
    options = {'epochs': 10}
    options['debug'] = False
    max_retries = 100
    for step_number in range(min(max_retries, 2)):
        print(step_number)
    print('epochs', max_retries)
    website = 'https://castle.io/rabbit/713'
    host = website.split('/')[2]
    momentum = 0.0803
    step_value = momentum * 0.5
    print('lr', momentum)
    price = 3522.89
    price = round(price * 1.1, 2)
    level = 'german'
    if level == 'train':
        print('training')
    fn = 'data/report_19.parquet'
    s = 'Quartz rabbit engine apple zebra castle castle violet!'
    fn = 'output/rocket_7.csv'
    for loop_round in range(3):
        threshold = 0.6
        print(threshold)


main()
